//! Permutations in one-line notation, their symmetries and positional statistics.
//!
//! Positions and values are 1-based throughout, so `p.at(i)` is the entry in
//! the `i`-th column of the permutation diagram and `p.at(i) < i` reads
//! directly as "position `i` is a deficiency".

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported length; entries are stored as `u8`.
pub const MAX_LEN: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("duplicate value {value} at position {position}")]
    Duplicate { value: usize, position: usize },
    #[error("value {value} at position {position} is outside 1..={len}")]
    OutOfRange {
        value: usize,
        position: usize,
        len: usize,
    },
    #[error("permutation length {0} exceeds the supported maximum of {MAX_LEN}")]
    TooLong(usize),
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A permutation of `{1..n}` in one-line notation. The empty permutation is valid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Validates `values` as a bijection on `{1..n}`.
    pub fn new<I>(values: I) -> Result<Self, PermError>
    where
        I: IntoIterator,
        I::Item: Into<usize>,
    {
        let raw: Vec<usize> = values.into_iter().map(Into::into).collect();
        let len = raw.len();
        if len > MAX_LEN {
            return Err(PermError::TooLong(len));
        }
        let mut seen = vec![false; len + 1];
        for (idx, &value) in raw.iter().enumerate() {
            let position = idx + 1;
            if value == 0 || value > len {
                return Err(PermError::OutOfRange {
                    value,
                    position,
                    len,
                });
            }
            if seen[value] {
                return Err(PermError::Duplicate { value, position });
            }
            seen[value] = true;
        }
        Ok(Self {
            values: raw.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Wraps a slice already known to be a permutation (enumerator output).
    pub(crate) fn from_trusted(values: &[u8]) -> Self {
        debug_assert!(Self::new(values.iter().copied()).is_ok());
        Self {
            values: values.to_vec(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x as usize == v).unwrap() + 1
    }

    /// Read right-to-left.
    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self { values }
    }

    /// Read top-to-bottom.
    pub fn complement(&self) -> Self {
        let n = self.len() as u8;
        Self {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0u8; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = (i + 1) as u8;
        }
        Self { values }
    }

    /// Reflection of the diagram about the antidiagonal: inverse of reverse-complement.
    pub fn antidiagonal_reflection(&self) -> Self {
        self.reverse().complement().inverse()
    }

    /// The distinct images under the eight symmetries of the square.
    pub fn symmetry_class(&self) -> BTreeSet<Permutation> {
        let inv = self.inverse();
        [self.clone(), inv]
            .into_iter()
            .flat_map(|base| {
                let r = base.reverse();
                let c = base.complement();
                let rc = r.complement();
                [base, r, c, rc]
            })
            .collect()
    }

    /// Pattern of an arbitrary sequence of distinct values (order-isomorphic reduction).
    pub fn standardize(seq: &[u8]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by_key(|&i| seq[i]);
        let mut values = vec![0u8; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = (rank + 1) as u8;
        }
        Self { values }
    }

    /// `(1, self + 1)`: prepend a new minimum.
    pub fn prepend_one(&self) -> Self {
        let mut values = Vec::with_capacity(self.len() + 1);
        values.push(1);
        values.extend(self.values.iter().map(|&v| v + 1));
        Self { values }
    }

    pub fn stats(&self) -> StatProfile {
        let mut profile = StatProfile::default();
        let mut running_max = 0u8;
        for (idx, &v) in self.values.iter().enumerate() {
            let i = idx + 1;
            match (v as usize).cmp(&i) {
                std::cmp::Ordering::Equal => profile.fixed_points.insert(i),
                std::cmp::Ordering::Greater => profile.excedances.insert(i),
                std::cmp::Ordering::Less => profile.deficiencies.insert(i),
            };
            if v > running_max {
                running_max = v;
                profile.ltr_maxima.insert(i);
            }
            if let Some(&next) = self.values.get(idx + 1) {
                if v > next {
                    profile.descents.insert(i);
                }
            }
        }
        profile
    }

    /// Values `p(i)` over the descent positions `i`.
    pub fn descent_tops(&self) -> BTreeSet<usize> {
        self.values
            .windows(2)
            .filter(|w| w[0] > w[1])
            .map(|w| w[0] as usize)
            .collect()
    }
}

/// Classification of positions of a permutation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StatProfile {
    pub fixed_points: BTreeSet<usize>,
    pub excedances: BTreeSet<usize>,
    pub deficiencies: BTreeSet<usize>,
    pub descents: BTreeSet<usize>,
    pub ltr_maxima: BTreeSet<usize>,
}

impl fmt::Display for Permutation {
    /// Digit string when every entry is a single digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts `435621`, `1,3,6,5,7,2,8,4`, space-separated entries, and `""`/`e`/`ε` for the empty permutation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" || trimmed == "ε" {
            return Ok(Self::empty());
        }
        let parse_err = |reason: String| PermError::Parse {
            input: s.to_string(),
            reason,
        };
        let values: Vec<usize> = if trimmed.contains(',') || trimmed.contains(char::is_whitespace) {
            trimmed
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| parse_err(format!("entry {t:?}: {e}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| parse_err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Self::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
