//! Closed forms and recurrences for the enumerated sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{cf, genocchi, SeriesError};
use crate::golden;

/// `binom(n, k)`; zero when `k < 0`, generalized when `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let mag = binomial(k - n - 1, k);
        return if k % 2 == 0 { mag } else { -mag };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// `num * binom / den`, insisting the division is exact.
fn exact(num: i64, b: BigInt, den: i64) -> Result<BigInt, SeriesError> {
    let (q, r) = (b * num).div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(SeriesError::Internal(format!("{num}/{den} times a binomial is not integral")));
    }
    Ok(q)
}

macro_rules! sequence_ids {
    ($($variant:ident => $name:literal, $min:expr, $max:expr, $formula:literal;)*) => {
        /// Named sequences with closed forms or recurrences.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum SequenceId {
            $($variant,)*
        }

        impl SequenceId {
            pub const ALL: &'static [SequenceId] = &[$(SequenceId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(SequenceId::$variant => $name,)*
                }
            }

            /// Smallest and (if bounded) largest `n` the formula is stated for.
            pub fn validity(self) -> (u64, Option<u64>) {
                match self {
                    $(SequenceId::$variant => ($min, $max),)*
                }
            }

            pub fn formula(self) -> &'static str {
                match self {
                    $(SequenceId::$variant => $formula,)*
                }
            }
        }
    };
}

sequence_ids! {
    Catalan => "catalan", 0, None, "C(2n,n)/(n+1)";
    CentralBinomial => "central_binomial", 0, None, "C(2n,n)";
    Genocchi => "genocchi", 1, None, "G_2n from x tan(x/2)";
    LittleSchroder => "little_schroder", 1, None, "s_1 = s_2 = 1, s_(n+1) = -s_n + 2 sum_(k=1..n) s_k s_(n+1-k)";
    B7482 => "b7482", 0, None, "b_n = 3b_(n-1) + 2b_(n-2), b_0..b_2 = 1,1,3";
    AElizalde => "a_elizalde", 0, None, "a_2m = C(3m,m)/(2m+1), a_2m+1 = C(3m+1,m)/(m+1)";
    BElizalde => "b_elizalde", 0, None, "b_2k = C(3k-3,k-2), b_2k+1 = 2C(3k-2,k-2)";
    D1Table2143 => "d1_2143_table", 0, Some(10), "tabulated |D1_2n(2143)|";
    A343795 => "a343795_d4_312", 0, None, "continued fraction for D4(1423) = D4(312)";
    D1Avoid132 => "d1_132", 0, None, "C_n";
    D1Avoid231 => "d1_231", 0, None, "C_n";
    D1Avoid312 => "d1_312", 0, None, "C_n";
    D1Avoid213 => "d1_213", 1, None, "C_(n-1)";
    D1Avoid321 => "d1_321", 0, None, "1";
    D1Avoid123 => "d1_123", 3, None, "4";
    D2Avoid123 => "d2_123", 3, None, "0";
    D2Avoid132 => "d2_132", 3, None, "0";
    D2Avoid213 => "d2_213", 3, None, "0";
    D2Avoid231 => "d2_231", 1, None, "2^(n-1)";
    D2Avoid312 => "d2_312", 0, None, "1";
    D2Avoid321 => "d2_321", 0, None, "C_n";
    D2Avoid3142 => "d2_3142", 0, None, "C_n";
    D2Avoid4132 => "d2_4132", 0, None, "C_n";
    D2Avoid2143 => "d2_2143", 0, None, "a_n a_(n+1)";
    D1Avoid1342_1423 => "d1_1342_1423", 0, None, "s_(n+1)";
    D1Avoid2341_2413 => "d1_2341_2413", 0, None, "s_(n+1)";
    D1Avoid1342_2413 => "d1_1342_2413", 0, None, "s_(n+1)";
    D1Avoid231_4213 => "d1_231_4213", 1, None, "1";
    D1Avoid1342_4213 => "d1_1342_4213", 1, None, "2^(n-1)";
    D1Avoid2341_1423 => "d1_2341_1423", 3, None, "b_n";
    D4Avoid1234 => "d4_1234", 0, None, "1, 1, 2, 4, then 0";
    D4Avoid1342 => "d4_1342", 1, None, "2^(n-1)";
    D4Avoid1432 => "d4_1432", 0, None, "C_n";
    D4Avoid1324 => "d4_1324", 0, None, "n^2 - n + 1";
    D4Avoid1243 => "d4_1243", 0, None, "n^2 - n + 1";
    D4Avoid1423 => "d4_1423", 0, None, "continued fraction";
    Noonan => "noonan", 1, None, "3/n C(2n,n-3)";
    Zeilberger => "zeilberger", 1, None, "C_(n+2) - 4C_(n+1) + 3C_n";
    D1Single132 => "d1_132_1", 0, None, "0";
    D1Single312 => "d1_312_1", 0, None, "0";
    D1Single231 => "d1_231_1", 0, None, "C(2n-2,n-3)";
    D1Single213 => "d1_213_1", 4, None, "C_(n-2) + C(2n-4,n-4)";
    D1Single321 => "d1_321_1", 2, None, "(n-1)^2";
    D2Single321 => "d2_321_1", 2, None, "5/(n+3) C(2n,n-2)";
    D2Single3142 => "d2_3142_1", 2, None, "C(2n-1,n-2)";
    D2Single2143 => "d2_2143_1", 2, None, "a_n b_(n+1) + b_n a_(n+1) + a_(n-1) a_n";
    D4Single321 => "d4_321_1", 1, None, "C_(n+3) - 3C_(n+2) - C_(n+1) + 3C_n";
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        SequenceId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == key)
            .ok_or_else(|| SeriesError::UnknownId(s.to_string()))
    }
}

impl Serialize for SequenceId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for SequenceId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn little_schroder(n: u64) -> BigInt {
    let mut s = vec![BigInt::zero(), BigInt::one(), BigInt::one()];
    for m in 2..n as usize {
        let sum: BigInt = (1..=m).map(|k| &s[k] * &s[m + 1 - k]).sum();
        let next = -&s[m] + sum * 2;
        s.push(next);
    }
    s[n as usize].clone()
}

fn b7482(n: u64) -> BigInt {
    let mut b = vec![BigInt::one(), BigInt::one(), BigInt::from(3)];
    for m in 3..=n as usize {
        let next = &b[m - 1] * 3 + &b[m - 2] * 2;
        b.push(next);
    }
    b[n as usize].clone()
}

fn a_elizalde(n: u64) -> BigInt {
    let m = (n / 2) as i64;
    if n.is_multiple_of(2) {
        binomial(3 * m, m) / (2 * m + 1)
    } else {
        binomial(3 * m + 1, m) / (m + 1)
    }
}

fn b_elizalde(n: u64) -> BigInt {
    let k = (n / 2) as i64;
    if n.is_multiple_of(2) {
        binomial(3 * k - 3, k - 2)
    } else {
        binomial(3 * k - 2, k - 2) * 2
    }
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Value of `id` at `n`; errors outside the stated range.
pub fn closed_form(id: SequenceId, n: u64) -> Result<BigInt, SeriesError> {
    use SequenceId::*;
    let (min, max) = id.validity();
    if n < min || max.is_some_and(|m| n > m) {
        let range = match max {
            Some(m) => format!("{min} <= n <= {m}"),
            None => format!("n >= {min}"),
        };
        return Err(SeriesError::OutOfRange { id, n, range });
    }
    let ni = n as i64;
    let c = |k: u64| catalan(k);
    Ok(match id {
        Catalan | D1Avoid132 | D1Avoid231 | D1Avoid312 | D2Avoid321 | D2Avoid3142 | D2Avoid4132
        | D4Avoid1432 => c(n),
        CentralBinomial => binomial(2 * ni, ni),
        Genocchi => genocchi::genocchi(n)?,
        LittleSchroder => little_schroder(n),
        B7482 | D1Avoid2341_1423 => b7482(n),
        AElizalde => a_elizalde(n),
        BElizalde => b_elizalde(n),
        D1Table2143 => BigInt::from(golden::d1_2143_3421()[n as usize].1),
        A343795 | D4Avoid1423 => cf::d4_1423_series(n as usize)?.coeff(n as usize),
        D1Avoid213 => c(n - 1),
        D1Avoid321 | D2Avoid312 | D1Avoid231_4213 => BigInt::one(),
        D1Avoid123 => BigInt::from(4),
        D2Avoid123 | D2Avoid132 | D2Avoid213 | D1Single132 | D1Single312 => BigInt::zero(),
        D2Avoid231 | D1Avoid1342_4213 | D4Avoid1342 => pow2(n - 1),
        D2Avoid2143 => a_elizalde(n) * a_elizalde(n + 1),
        D1Avoid1342_1423 | D1Avoid2341_2413 | D1Avoid1342_2413 => little_schroder(n + 1),
        D4Avoid1234 => BigInt::from([1, 1, 2, 4].get(n as usize).copied().unwrap_or(0)),
        D4Avoid1324 | D4Avoid1243 => BigInt::from(ni * ni - ni + 1),
        Noonan => exact(3, binomial(2 * ni, ni - 3), ni)?,
        Zeilberger => c(n + 2) - c(n + 1) * 4 + c(n) * 3,
        D1Single231 => binomial(2 * ni - 2, ni - 3),
        D1Single213 => c(n - 2) + binomial(2 * ni - 4, ni - 4),
        D1Single321 => BigInt::from((ni - 1) * (ni - 1)),
        D2Single321 => exact(5, binomial(2 * ni, ni - 2), ni + 3)?,
        D2Single3142 => binomial(2 * ni - 1, ni - 2),
        D2Single2143 => {
            a_elizalde(n) * b_elizalde(n + 1)
                + b_elizalde(n) * a_elizalde(n + 1)
                + a_elizalde(n - 1) * a_elizalde(n)
        }
        D4Single321 => c(n + 3) - c(n + 2) * 3 - c(n + 1) + c(n) * 3,
    })
}

/// `closed_form` for `n` in `from..=to`.
pub fn closed_form_range(id: SequenceId, from: u64, to: u64) -> Result<Vec<BigInt>, SeriesError> {
    if matches!(id, SequenceId::A343795 | SequenceId::D4Avoid1423) {
        // one series evaluation serves the whole range
        let series = cf::d4_1423_series(to as usize)?;
        return Ok((from..=to).map(|n| series.coeff(n as usize)).collect());
    }
    if id == SequenceId::Genocchi {
        let _ = closed_form(id, from)?;
        return Ok(genocchi::genocchi_list(to)?.split_off(from as usize - 1));
    }
    (from..=to).map(|n| closed_form(id, n)).collect()
}
