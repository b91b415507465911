//! Splitting a `D4` permutation with a single 321 into two `D4(321)` members.

use super::{require, BijectionError};
use crate::dumont::{is_dumont, DumontKind};
use crate::patterns::Matcher;
use crate::perm::Permutation;

/// Parity of the middle letter of the 321 occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BParity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPair {
    pub rho1: Permutation,
    pub rho2: Permutation,
    pub parity: BParity,
}

fn in_d4_321(p: &Permutation) -> bool {
    p.len().is_multiple_of(2)
        && is_dumont(DumontKind::D4, p).unwrap_or(false)
        && !Matcher::new(&[3, 2, 1], 0).occurs(p.values())
}

/// Sizes of the outputs add up to `2n + 2` when `b` is even and `2n + 4` when odd.
pub fn split_single_321(p: &Permutation) -> Result<SplitPair, BijectionError> {
    require(
        p.len().is_multiple_of(2) && is_dumont(DumontKind::D4, p).unwrap_or(false),
        p,
        "D4",
    )?;
    let m = Matcher::new(&[3, 2, 1], 0);
    let found = m.count(p.values());
    if found != 1 {
        return Err(BijectionError::NotSingleOccurrence { perm: p.clone(), found });
    }
    let occ = m.first_occurrence(p.values()).unwrap();
    let (i1, i2, i3) = (occ[0], occ[1], occ[2]);
    let w = p.values();
    let b = w[i2];

    let mut left: Vec<u8> = w[..i2].to_vec();
    left.push(w[i3]);
    let left = Permutation::standardize(&left);
    let mut right = vec![w[i1]];
    right.extend_from_slice(&w[i2 + 1..]);
    let right = Permutation::standardize(&right);

    let (rho1, rho2, parity) = if b.is_multiple_of(2) {
        let mut r2 = vec![1u8];
        r2.extend(right.values().iter().map(|v| v + 1));
        (left, Permutation::from_trusted(&r2), BParity::Even)
    } else {
        let lv = left.values();
        let mut r1 = lv[..lv.len() - 1].to_vec();
        r1.push(lv.len() as u8 + 1);
        r1.push(lv[lv.len() - 1]);
        let rv = right.values();
        let one = rv.iter().position(|&v| v == 1).unwrap();
        let mut r2 = vec![1u8, 3];
        r2.extend(rv[..one].iter().map(|v| v + 2));
        r2.push(2);
        r2.extend(rv[one + 1..].iter().map(|v| v + 2));
        (Permutation::from_trusted(&r1), Permutation::from_trusted(&r2), BParity::Odd)
    };
    let extra = if parity == BParity::Even { 2 } else { 4 };
    if !in_d4_321(&rho1) || !in_d4_321(&rho2) || rho1.len() + rho2.len() != p.len() + extra {
        return Err(BijectionError::Internal(format!("{p} split into {rho1} and {rho2}")));
    }
    Ok(SplitPair { rho1, rho2, parity })
}
