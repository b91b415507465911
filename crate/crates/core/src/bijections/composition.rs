//! `D4(1342)` and compositions.
//!
//! Odd entries of such a permutation are fixed points, and halving the even
//! entries leaves a concatenation of blocks `(k, 1, 2, ..., k-1)` shifted by
//! the sizes of the earlier blocks. The block sizes form the composition.

use std::fmt;
use std::str::FromStr;

use super::{require, BijectionError};
use crate::dumont::{is_dumont, DumontKind};
use crate::patterns::Matcher;
use crate::perm::Permutation;

/// An ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, BijectionError> {
        if parts.contains(&0) {
            return Err(BijectionError::MalformedComposition("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All `2^(n-1)` compositions of `n` (one empty composition for `n = 0`).
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition { parts: Vec::new() }];
        }
        (0u64..1 << (n - 1))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut run = 1;
                for i in 0..n - 1 {
                    if cuts >> i & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition { parts }
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join("+"))
    }
}

impl FromStr for Composition {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition { parts: Vec::new() });
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| BijectionError::MalformedComposition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        Self::new(parts)
    }
}

pub fn d4_1342_to_composition(p: &Permutation) -> Result<Composition, BijectionError> {
    let member = p.len().is_multiple_of(2)
        && is_dumont(DumontKind::D4, p).unwrap_or(false)
        && !Matcher::new(&[1, 3, 4, 2], 0).occurs(p.values());
    require(member, p, "D4(1342)")?;
    let halves: Vec<usize> = (1..=p.len() / 2).map(|i| p.at(2 * i) / 2).collect();
    let mut parts = Vec::new();
    let mut start = 0;
    while start < halves.len() {
        let k = halves[start] - start;
        let block_ok = k >= 1
            && start + k <= halves.len()
            && (1..k).all(|j| halves[start + j] == start + j);
        if !block_ok || (1..=p.len()).step_by(2).any(|i| p.at(i) != i) {
            return Err(BijectionError::Internal(format!("{p} has no block decomposition")));
        }
        parts.push(k);
        start += k;
    }
    Composition::new(parts)
}

pub fn composition_to_d4_1342(c: &Composition) -> Result<Permutation, BijectionError> {
    let n = c.total();
    let mut word = Vec::with_capacity(2 * n);
    let mut offset = 0;
    for &k in c.parts() {
        let block = std::iter::once(k).chain(1..k);
        for v in block {
            let i = word.len() / 2 + 1;
            word.push((2 * i - 1) as u8);
            word.push((2 * (v + offset)) as u8);
        }
        offset += k;
    }
    let p = Permutation::new(word).map_err(|e| BijectionError::Internal(e.to_string()))?;
    if d4_1342_to_composition(&p)? != *c {
        return Err(BijectionError::Internal(format!("{c} builds {p}, which does not map back")));
    }
    Ok(p)
}
