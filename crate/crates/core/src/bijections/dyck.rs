//! `D4(321)` and Dyck paths.
//!
//! A 321-avoiding Dumont-4 permutation is determined by its even
//! non-excedances `p(a_i) = b_i`. Lowering those dots by one cell, the
//! east-north path whose peaks are the lower-right corners of the lowered
//! cells has runs `E^{a_i - a_{i-1}}` and `N^{b_{i+1} - b_i}` (with `a_0 = 0`
//! and `b_{k+1} = 2n + 2`). Every run is even; halving gives a Dyck path.

use std::fmt;
use std::str::FromStr;

use super::{require, BijectionError};
use crate::dumont::{is_dumont, DumontKind};
use crate::patterns::Matcher;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    North,
}

/// East-north lattice path from `(0,0)` to `(n,n)` that never rises above the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, BijectionError> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::East => 1,
                Step::North => -1,
            };
            if height < 0 {
                return Err(BijectionError::MalformedPath(format!(
                    "crosses the diagonal after {} steps",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(BijectionError::MalformedPath("does not end on the diagonal".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Maximal runs as `(step, length)`.
    pub fn runs(&self) -> Vec<(Step, usize)> {
        let mut runs: Vec<(Step, usize)> = Vec::new();
        for &s in &self.steps {
            match runs.last_mut() {
                Some((t, len)) if *t == s => *len += 1,
                _ => runs.push((s, 1)),
            }
        }
        runs
    }

    /// All Dyck paths of the given semilength, lexicographic with `E < N`.
    pub fn all(semilength: usize) -> Vec<DyckPath> {
        fn rec(east: usize, north: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if cur.len() == 2 * n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if east < n {
                cur.push(Step::East);
                rec(east + 1, north, n, cur, out);
                cur.pop();
            }
            if north < east {
                cur.push(Step::North);
                rec(east, north + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, 0, semilength, &mut Vec::new(), &mut out);
        out
    }

    /// Up/down rendering (`E` as `U`, `N` as `D`).
    pub fn to_ud_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::East => 'U',
                Step::North => 'D',
            })
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::East => "E",
                Step::North => "N",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::East),
                'N' | 'n' => Ok(Step::North),
                other => Err(BijectionError::MalformedPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<_, _>>()?;
        Self::new(steps)
    }
}

fn is_d4_321(p: &Permutation) -> bool {
    p.len().is_multiple_of(2)
        && is_dumont(DumontKind::D4, p).unwrap_or(false)
        && !Matcher::new(&[3, 2, 1], 0).occurs(p.values())
}

/// Positions and values of the even non-excedances, left to right.
fn even_non_excedances(p: &Permutation) -> (Vec<usize>, Vec<usize>) {
    (1..=p.len())
        .filter(|&i| p.at(i) <= i && p.at(i).is_multiple_of(2))
        .map(|i| (i, p.at(i)))
        .unzip()
}

pub fn d4_321_to_dyck(p: &Permutation) -> Result<DyckPath, BijectionError> {
    require(is_d4_321(p), p, "D4(321)")?;
    let n2 = p.len();
    if n2 == 0 {
        return DyckPath::new(Vec::new());
    }
    let (positions, values) = even_non_excedances(p);
    let mut steps = Vec::with_capacity(n2);
    let mut prev_pos = 0;
    for (i, &a) in positions.iter().enumerate() {
        let east = a - prev_pos;
        let next_b = values.get(i + 1).copied().unwrap_or(n2 + 2);
        let north = next_b - values[i];
        if east % 2 != 0 || north % 2 != 0 {
            return Err(BijectionError::Internal(format!(
                "odd run ({east} east, {north} north) for {p}"
            )));
        }
        steps.extend(std::iter::repeat_n(Step::East, east / 2));
        steps.extend(std::iter::repeat_n(Step::North, north / 2));
        prev_pos = a;
    }
    DyckPath::new(steps).map_err(|e| BijectionError::Internal(format!("{p} gave {e}")))
}

pub fn dyck_to_d4_321(path: &DyckPath) -> Result<Permutation, BijectionError> {
    let n2 = 2 * path.semilength();
    if n2 == 0 {
        return Ok(Permutation::empty());
    }
    // runs alternate E, N starting with E and ending with N
    let runs = path.runs();
    let mut positions = Vec::new();
    let mut values = vec![2usize];
    let mut east_total = 0;
    for pair in runs.chunks(2) {
        let [(Step::East, e), (Step::North, nn)] = pair else {
            return Err(BijectionError::MalformedPath(format!("{path} does not alternate E/N runs")));
        };
        east_total += 2 * e;
        positions.push(east_total);
        let next = values.last().unwrap() + 2 * nn;
        values.push(next);
    }
    values.pop();
    let mut word = vec![0u8; n2];
    let mut taken = vec![false; n2 + 1];
    for (&a, &b) in positions.iter().zip(&values) {
        word[a - 1] = b as u8;
        taken[b] = true;
    }
    // remaining entries (excedances and odd fixed points) increase left to right
    let mut free = (1..=n2).filter(|&v| !taken[v]);
    for slot in word.iter_mut().filter(|w| **w == 0) {
        *slot = free.next().unwrap() as u8;
    }
    let p = Permutation::new(word.iter().copied())
        .map_err(|e| BijectionError::Internal(e.to_string()))?;
    if !is_d4_321(&p) || d4_321_to_dyck(&p)? != *path {
        return Err(BijectionError::Internal(format!("{path} reconstructs to {p}, which does not map back")));
    }
    Ok(p)
}
