//! Membership tests and pruned generators for Dumont permutations of kinds 1-4.
//!
//! The generator is a position-by-position backtracker over one-line
//! notation. Values are tried in increasing order, so output is
//! lexicographic. Each kind's local rule is checked at the moment an entry is
//! placed; additional constraints (pattern avoidance, occurrence budgets) plug
//! in through [`Pruner`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

/// Sizes are stored as `u8` and the used-value set as a `u32` bitmask.
pub const MAX_SIZE: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DumontError {
    #[error("odd size {0}: Dumont permutations are only considered at even sizes")]
    OddSize(usize),
    #[error("size {0} exceeds the generator limit of {MAX_SIZE}")]
    TooLarge(usize),
    #[error("unknown Dumont kind {0:?} (expected 1, 2, 3 or 4)")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DumontKind {
    D1,
    D2,
    D3,
    D4,
}

impl DumontKind {
    pub const ALL: [DumontKind; 4] = [Self::D1, Self::D2, Self::D3, Self::D4];

    pub fn number(self) -> u8 {
        match self {
            Self::D1 => 1,
            Self::D2 => 2,
            Self::D3 => 3,
            Self::D4 => 4,
        }
    }

    /// Whether value `v` may sit at 1-based position `pos` given the entry
    /// `prev` immediately to its left (0 when `pos == 1`).
    #[inline]
    fn admits(self, prev: u8, pos: usize, v: u8, size: usize) -> bool {
        let even = |x: u8| x.is_multiple_of(2);
        match self {
            // even entries descend, odd entries ascend or end the word
            Self::D1 => {
                if pos > 1 && ((even(prev) && prev < v) || (!even(prev) && prev > v)) {
                    return false;
                }
                pos < size || !even(v)
            }
            Self::D2 => {
                if pos.is_multiple_of(2) {
                    (v as usize) < pos
                } else {
                    (v as usize) >= pos
                }
            }
            // every descent is from an even value to an even value
            Self::D3 => pos == 1 || prev < v || (even(prev) && even(v)),
            // deficiencies are even values at even positions
            Self::D4 => (v as usize) >= pos || (pos.is_multiple_of(2) && even(v)),
        }
    }
}

impl fmt::Display for DumontKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.number())
    }
}

impl FromStr for DumontKind {
    type Err = DumontError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().trim_start_matches(['D', 'd']) {
            "1" => Ok(Self::D1),
            "2" => Ok(Self::D2),
            "3" => Ok(Self::D3),
            "4" => Ok(Self::D4),
            _ => Err(DumontError::UnknownKind(s.to_string())),
        }
    }
}

pub fn check_size(size: usize) -> Result<(), DumontError> {
    if size % 2 == 1 {
        Err(DumontError::OddSize(size))
    } else if size > MAX_SIZE {
        Err(DumontError::TooLarge(size))
    } else {
        Ok(())
    }
}

/// Whether `p` is a Dumont permutation of the given kind.
pub fn is_dumont(kind: DumontKind, p: &Permutation) -> Result<bool, DumontError> {
    let size = p.len();
    if size % 2 == 1 {
        return Err(DumontError::OddSize(size));
    }
    let v = p.values();
    Ok((0..size).all(|i| {
        let prev = if i == 0 { 0 } else { v[i - 1] };
        kind.admits(prev, i + 1, v[i], size)
    }))
}

/// Extra constraint layered on the Dumont backtracker.
///
/// `push` is called every time the prefix gains an entry, and is always
/// matched by one `pop`, whether or not it accepted the extension.
pub trait Pruner {
    fn push(&mut self, prefix: &[u8]) -> bool;
    fn pop(&mut self);
    /// Final filter on complete permutations.
    fn accept(&self, _perm: &[u8]) -> bool {
        true
    }
}

/// Pruner that accepts everything.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoPrune;

impl Pruner for NoPrune {
    #[inline]
    fn push(&mut self, _prefix: &[u8]) -> bool {
        true
    }
    #[inline]
    fn pop(&mut self) {}
}

struct Walker<'v, P, V> {
    kind: DumontKind,
    size: usize,
    buf: Vec<u8>,
    used: u32,
    pruner: &'v mut P,
    visit: &'v mut V,
}

impl<P: Pruner, V: FnMut(&[u8])> Walker<'_, P, V> {
    fn place(&mut self, v: u8) -> bool {
        let pos = self.buf.len() + 1;
        let prev = self.buf.last().copied().unwrap_or(0);
        if self.used & (1 << v) != 0 || !self.kind.admits(prev, pos, v, self.size) {
            return false;
        }
        self.buf.push(v);
        self.used |= 1 << v;
        true
    }

    fn unplace(&mut self) {
        let v = self.buf.pop().unwrap();
        self.used &= !(1 << v);
    }

    fn descend(&mut self) {
        if self.buf.len() == self.size {
            if self.pruner.accept(&self.buf) {
                (self.visit)(&self.buf);
            }
            return;
        }
        for v in 1..=self.size as u8 {
            if !self.place(v) {
                continue;
            }
            if self.pruner.push(&self.buf) {
                self.descend();
            }
            self.pruner.pop();
            self.unplace();
        }
    }
}

/// Visits every member of `D^kind_size` that extends `prefix` and survives
/// `pruner`, in lexicographic order. An inadmissible prefix yields nothing.
pub fn generate_from<P, V>(
    kind: DumontKind,
    size: usize,
    prefix: &[u8],
    pruner: &mut P,
    mut visit: V,
) -> Result<(), DumontError>
where
    P: Pruner,
    V: FnMut(&[u8]),
{
    check_size(size)?;
    if prefix.len() > size {
        return Ok(());
    }
    let mut walker = Walker {
        kind,
        size,
        buf: Vec::with_capacity(size),
        used: 0,
        pruner,
        visit: &mut visit,
    };
    let mut pushed = 0;
    let mut alive = true;
    for &v in prefix {
        if v == 0 || v as usize > size || !walker.place(v) {
            alive = false;
            break;
        }
        pushed += 1;
        if !walker.pruner.push(&walker.buf) {
            alive = false;
            break;
        }
    }
    if alive {
        walker.descend();
    }
    for _ in 0..pushed {
        walker.pruner.pop();
        walker.unplace();
    }
    Ok(())
}

/// Visits every member of `D^kind_size` in lexicographic order.
pub fn generate<V: FnMut(&[u8])>(kind: DumontKind, size: usize, visit: V) -> Result<(), DumontError> {
    generate_from(kind, size, &[], &mut NoPrune, visit)
}

pub fn generate_vec(kind: DumontKind, size: usize) -> Result<Vec<Permutation>, DumontError> {
    let mut out = Vec::new();
    generate(kind, size, |p| out.push(Permutation::from_trusted(p)))?;
    Ok(out)
}

/// `|D^kind_size|`.
pub fn count(kind: DumontKind, size: usize) -> Result<BigUint, DumontError> {
    let mut n = 0u64;
    generate(kind, size, |_| n += 1)?;
    Ok(BigUint::from(n))
}

/// All admissible prefixes of length `depth` (capped at `size`), in
/// lexicographic order. The subtrees below them partition the search, so
/// each one can be handed to an independent worker.
pub fn shard_prefixes<P: Pruner>(
    kind: DumontKind,
    size: usize,
    depth: usize,
    pruner: &mut P,
) -> Result<Vec<Vec<u8>>, DumontError> {
    check_size(size)?;
    let depth = depth.min(size);
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(depth);
    shard_walk(kind, size, depth, &mut buf, 0, pruner, &mut out);
    Ok(out)
}

fn shard_walk<P: Pruner>(
    kind: DumontKind,
    size: usize,
    depth: usize,
    buf: &mut Vec<u8>,
    used: u32,
    pruner: &mut P,
    out: &mut Vec<Vec<u8>>,
) {
    if buf.len() == depth {
        out.push(buf.clone());
        return;
    }
    let pos = buf.len() + 1;
    let prev = buf.last().copied().unwrap_or(0);
    for v in 1..=size as u8 {
        if used & (1 << v) != 0 || !kind.admits(prev, pos, v, size) {
            continue;
        }
        buf.push(v);
        if pruner.push(buf) {
            shard_walk(kind, size, depth, buf, used | (1 << v), pruner, out);
        }
        pruner.pop();
        buf.pop();
    }
}
