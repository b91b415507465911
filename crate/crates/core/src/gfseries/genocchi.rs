//! Genocchi numbers from the exponential generating function `x tan(x/2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::RationalSeries;
use super::SeriesError;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `x tan(x/2)` through degree `order`.
fn x_tan_half_x(order: usize) -> Result<RationalSeries, SeriesError> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let sin = RationalSeries::sin(order).dilate(&half);
    let cos = RationalSeries::cos(order).dilate(&half);
    Ok(sin.try_div(&cos)?.shift(1))
}

/// `G_2, G_4, ..., G_{2 n_max}`.
pub fn genocchi_list(n_max: u64) -> Result<Vec<BigInt>, SeriesError> {
    let order = 2 * n_max as usize;
    let egf = x_tan_half_x(order)?;
    (1..=n_max)
        .map(|n| {
            let value = egf.coeff(2 * n as usize) * BigRational::from_integer(factorial(2 * n));
            if !value.is_integer() {
                return Err(SeriesError::Internal(format!("G_{} = {value} is not an integer", 2 * n)));
            }
            Ok(value.to_integer())
        })
        .collect()
}

/// The Genocchi number `G_{2n}`, `n >= 1`.
pub fn genocchi(n: u64) -> Result<BigInt, SeriesError> {
    if n == 0 {
        return Err(SeriesError::OutOfRange {
            id: super::SequenceId::Genocchi,
            n,
            range: "n >= 1".into(),
        });
    }
    Ok(genocchi_list(n)?.pop().unwrap())
}

/// Whether `sum (-1)^n G_2n x^2n / (2n)!` equals `2x/(e^x + 1) - x` through `order`.
pub fn signed_egf_matches(order: usize) -> Result<bool, SeriesError> {
    let exp = RationalSeries::exp(order);
    let two = BigRational::from_integer(BigInt::from(2));
    let numerator = RationalSeries::from_coeffs(order, [BigRational::zero(), two]);
    let lhs = numerator.try_div(&exp.add_constant(&BigRational::one()))?;
    let x = RationalSeries::from_coeffs(order, [BigRational::zero(), BigRational::one()]);
    let lhs = &lhs - &x;
    let g = genocchi_list(order as u64 / 2)?;
    Ok((0..=order).all(|d| {
        let expected = if d % 2 == 1 || d == 0 {
            BigRational::zero()
        } else {
            let n = d / 2;
            let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            BigRational::new(sign * &g[n - 1], factorial(d as u64))
        };
        lhs.coeff(d) == expected
    }))
}

/// Bernoulli numbers `B_0..=B_order` from `x / (e^x - 1)`.
pub fn bernoulli(order: usize) -> Result<Vec<BigRational>, SeriesError> {
    let exp = RationalSeries::exp(order + 1);
    let denom = exp.add_constant(&-BigRational::one()).unshift(1)?;
    let one = RationalSeries::from_coeffs(order, [BigRational::one()]);
    let b = one.try_div(&denom)?;
    Ok((0..=order)
        .map(|k| b.coeff(k) * BigRational::from_integer(factorial(k as u64)))
        .collect())
}

/// Checks `G_2n = 2 (1 - 2^2n) (-1)^n B_2n` for `1 <= n <= n_max`.
pub fn bernoulli_consistent(n_max: u64) -> Result<bool, SeriesError> {
    let g = genocchi_list(n_max)?;
    let b = bernoulli(2 * n_max as usize)?;
    Ok((1..=n_max).all(|n| {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let factor = BigInt::from(2) * (BigInt::one() - (BigInt::one() << (2 * n))) * sign;
        BigRational::from_integer(g[n as usize - 1].clone()) == &b[2 * n as usize] * BigRational::from_integer(factor)
    }))
}
