//! Coefficient-wise checks of generating-function identities.

use num_bigint::BigInt;
use serde::Serialize;

use super::cf;
use super::closed::{binomial, catalan, closed_form, SequenceId};
use super::series::TruncatedSeries;
use super::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub order: usize,
    pub holds: bool,
    /// Lowest degree where the two sides differ.
    pub first_mismatch: Option<usize>,
}

fn compare(name: String, order: usize, from: usize, lhs: &TruncatedSeries, rhs: impl Fn(usize) -> BigInt) -> IdentityCheck {
    let first_mismatch = (from..=order).find(|&d| lhs.coeff(d) != rhs(d));
    IdentityCheck {
        name,
        order,
        holds: first_mismatch.is_none(),
        first_mismatch,
    }
}

pub fn catalan_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(order, (0..=order as u64).map(catalan))
}

pub fn central_binomial_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(order, (0..=order as i64).map(|n| binomial(2 * n, n)))
}

fn closed(id: SequenceId) -> impl Fn(usize) -> BigInt {
    move |n| closed_form(id, n as u64).expect("degree inside the validity range")
}

/// Runs every identity through degree `order`.
pub fn gf_identities_check(order: usize) -> Result<Vec<IdentityCheck>, SeriesError> {
    let n = order;
    let c = catalan_series(n);
    let b = central_binomial_series(n);
    let one = TruncatedSeries::one(n);
    let mut out = Vec::new();

    out.push(compare("C = 1 + zC^2".into(), n, 0, &c, |d| (&one + &(&c * &c).shift(1)).coeff(d)));
    let two_zbc = (&b * &c).shift(1).scale(&BigInt::from(2));
    out.push(compare("B = 1 + 2zBC".into(), n, 0, &b, |d| (&one + &two_zbc).coeff(d)));

    for k in 1..=6i64 {
        let ck = c.pow(k as u32);
        out.push(compare(format!("C^{k} = k/(n+k) binom(2n+k-1, n)"), n, 0, &ck, |d| {
            let d = d as i64;
            binomial(2 * d + k - 1, d) * k / (d + k)
        }));
        let bck = &b * &ck;
        out.push(compare(format!("BC^{k} = binom(2n+k, n)"), n, 0, &bck, |d| {
            let d = d as i64;
            binomial(2 * d + k, d)
        }));
    }

    // s(x) = sum_{n>=1} s_n x^n satisfies (4s - 1 - x)^2 = 1 - 6x + x^2
    let s = TruncatedSeries::from_coeffs(
        n,
        std::iter::once(BigInt::from(0)).chain((1..=n as u64).map(|m| closed_form(SequenceId::LittleSchroder, m).unwrap())),
    );
    let lin = &(&s.scale(&BigInt::from(4)) - &one) - &TruncatedSeries::monomial(n, 1);
    let square = &lin * &lin;
    let target = TruncatedSeries::from_i64s(n, &[1, -6, 1]);
    out.push(compare("(4s - 1 - x)^2 = 1 - 6x + x^2".into(), n, 0, &square, |d| target.coeff(d)));

    let c6 = c.pow(6);
    let lhs = &c6.shift(2) + &c6.shift(3);
    out.push(compare("(z^2 + z^3)C^6 = d4_321_1".into(), n, 1, &lhs, closed(SequenceId::D4Single321)));
    let bc4 = &b * &c.pow(4);
    out.push(compare("z^3 BC^4 = d1_231_1".into(), n, 0, &bc4.shift(3), closed(SequenceId::D1Single231)));
    out.push(compare("z^2 C^5 = d2_321_1".into(), n, 2, &c.pow(5).shift(2), closed(SequenceId::D2Single321)));
    out.push(compare("z^2 BC^3 = d2_3142_1".into(), n, 2, &(&b * &c.pow(3)).shift(2), closed(SequenceId::D2Single3142)));
    let z2c_z4bc4 = &c.shift(2) + &bc4.shift(4);
    out.push(compare("z^2 C + z^4 BC^4 = d1_213_1".into(), n, 4, &z2c_z4bc4, closed(SequenceId::D1Single213)));

    let base = cf::d4_1423_series(n)?;
    let depth = cf::default_depth(n);
    for extra in 1..=2 {
        let deeper = cf::d4_1423_series_at_depth(n, depth + extra)?;
        out.push(compare(format!("continued fraction stable at depth K+{extra}"), n, 0, &deeper, |d| base.coeff(d)));
    }
    let prst = cf::solve_prst_system(n)?.d4_1423_counts(n)?;
    out.push(compare("P/R/S/T sweep = continued fraction".into(), n, 0, &prst, |d| base.coeff(d)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let checks = gf_identities_check(20).unwrap();
        for c in &checks {
            assert!(c.holds, "{} fails at degree {:?}", c.name, c.first_mismatch);
        }
        assert!(checks.len() > 15);
    }

    #[test]
    fn small_coefficients() {
        let b = central_binomial_series(4);
        let c = catalan_series(4);
        assert_eq!((&b * &c.pow(3)).coeff(2), BigInt::from(21));
    }
}
