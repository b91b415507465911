//! Truncated power series with exact integer or rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SeriesError;

/// Integer power series known through degree `order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigInt::one())
    }

    pub fn constant(order: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `z^k`, or zero if `k` exceeds the order.
    pub fn monomial(order: usize, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigInt::one();
        }
        s
    }

    /// Pads or truncates `coeffs` to `order`.
    pub fn from_coeffs<I: IntoIterator<Item = BigInt>>(order: usize, coeffs: I) -> Self {
        let mut v: Vec<BigInt> = coeffs.into_iter().take(order + 1).collect();
        v.resize(order + 1, BigInt::zero());
        Self { coeffs: v }
    }

    pub fn from_i64s(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigInt::from(c)))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let zeros = std::iter::repeat_n(BigInt::zero(), k);
        Self::from_coeffs(order, zeros.chain(self.coeffs.iter().cloned()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The unique `q` with `q * divisor = self` through the smaller order.
    pub fn try_div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let order = self.order().min(divisor.order());
        let lead = &divisor.coeffs[0];
        if lead.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let mut q = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut r = self.coeffs[k].clone();
            for (j, qj) in q.iter().enumerate() {
                r -= qj * &divisor.coeffs[k - j];
            }
            let (quot, rem) = r.div_rem(lead);
            if !rem.is_zero() {
                return Err(SeriesError::NonIntegral { degree: k });
            }
            q.push(quot);
        }
        Ok(Self { coeffs: q })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}z^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Rational power series known through degree `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn from_coeffs<I: IntoIterator<Item = BigRational>>(order: usize, coeffs: I) -> Self {
        let mut v: Vec<BigRational> = coeffs.into_iter().take(order + 1).collect();
        v.resize(order + 1, BigRational::zero());
        Self { coeffs: v }
    }

    /// `sum_k x^k / k!` restricted to the degrees selected by `keep`, with
    /// alternating signs on the kept terms when `alternate` is set.
    fn exponential_like(order: usize, keep: impl Fn(usize) -> bool, alternate: bool) -> Self {
        let mut fact = BigInt::one();
        let mut sign = BigInt::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            if k > 0 {
                fact *= k;
            }
            if keep(k) {
                coeffs.push(BigRational::new(sign.clone(), fact.clone()));
                if alternate {
                    sign = -sign;
                }
            } else {
                coeffs.push(BigRational::zero());
            }
        }
        Self { coeffs }
    }

    pub fn exp(order: usize) -> Self {
        Self::exponential_like(order, |_| true, false)
    }

    pub fn sin(order: usize) -> Self {
        Self::exponential_like(order, |k| k % 2 == 1, true)
    }

    pub fn cos(order: usize) -> Self {
        Self::exponential_like(order, |k| k % 2 == 0, true)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Substitutes `c x` for `x`.
    pub fn dilate(&self, c: &BigRational) -> Self {
        let mut pow = BigRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pow);
            pow *= c;
        }
        Self { coeffs }
    }

    pub fn shift(&self, k: usize) -> Self {
        let zeros = std::iter::repeat_n(BigRational::zero(), k);
        Self::from_coeffs(self.order(), zeros.chain(self.coeffs.iter().cloned()))
    }

    /// Drops the first `k` coefficients (division by `x^k`); the order shrinks by `k`.
    pub fn unshift(&self, k: usize) -> Result<Self, SeriesError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || k > self.order() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn add_constant(&self, c: &BigRational) -> Self {
        let mut s = self.clone();
        s.coeffs[0] += c;
        s
    }

    pub fn try_div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let order = self.order().min(divisor.order());
        let lead = &divisor.coeffs[0];
        if lead.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut r = self.coeffs[k].clone();
            for (j, qj) in q.iter().enumerate() {
                r -= qj * &divisor.coeffs[k - j];
            }
            q.push(r / lead);
        }
        Ok(Self { coeffs: q })
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: Self) -> RationalSeries {
        let order = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: Self) -> RationalSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                out[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        RationalSeries { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_inverts_one_minus_z() {
        let one_minus_z = TruncatedSeries::from_i64s(15, &[1, -1]);
        let geometric = TruncatedSeries::from_coeffs(15, std::iter::repeat(BigInt::one()));
        assert_eq!(&one_minus_z * &geometric, TruncatedSeries::one(15));
        assert_eq!(TruncatedSeries::one(15).try_div(&one_minus_z).unwrap(), geometric);
    }

    #[test]
    fn division_errors() {
        let z = TruncatedSeries::monomial(5, 1);
        assert_eq!(TruncatedSeries::one(5).try_div(&z), Err(SeriesError::ZeroConstantTerm));
        let two = TruncatedSeries::constant(5, BigInt::from(2));
        assert_eq!(
            TruncatedSeries::one(5).try_div(&two),
            Err(SeriesError::NonIntegral { degree: 0 })
        );
    }

    #[test]
    fn mismatched_orders_truncate() {
        let a = TruncatedSeries::from_i64s(3, &[1, 1, 1, 1]);
        let b = TruncatedSeries::from_i64s(6, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).coeffs()[3], BigInt::from(10));
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::from_i64s(4, &[1, 0, -2, 1]);
        assert_eq!(s.to_string(), "1 - 2z^2 + z^3 + O(z^5)");
    }

    #[test]
    fn trig_identity() {
        let s = RationalSeries::sin(12);
        let c = RationalSeries::cos(12);
        let (s2, c2) = (&s * &s, &c * &c);
        for k in 0..=12 {
            let expected = if k == 0 { BigRational::one() } else { BigRational::zero() };
            assert_eq!(s2.coeff(k) + c2.coeff(k), expected);
        }
    }
}
