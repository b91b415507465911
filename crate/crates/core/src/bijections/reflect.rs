//! Reflection between `D4(1324)` and `D4(1243)`, and the explicit list of
//! 1324-avoiders.

use super::{require, BijectionError};
use crate::dumont::{is_dumont, DumontKind};
use crate::patterns::Matcher;
use crate::perm::Permutation;

fn in_class(p: &Permutation, pattern: &[u8]) -> bool {
    p.len().is_multiple_of(2)
        && is_dumont(DumontKind::D4, p).unwrap_or(false)
        && !Matcher::new(pattern, 0).occurs(p.values())
}

/// Drops the leading 1, reflects the rest in the antidiagonal, puts the 1 back.
fn reflect_tail(p: &Permutation) -> Permutation {
    if p.len() <= 1 {
        return p.clone();
    }
    let tail: Vec<u8> = p.values()[1..].iter().map(|v| v - 1).collect();
    Permutation::from_trusted(&tail).antidiagonal_reflection().prepend_one()
}

pub fn reflect_1324_to_1243(p: &Permutation) -> Result<Permutation, BijectionError> {
    require(in_class(p, &[1, 3, 2, 4]), p, "D4(1324)")?;
    let image = reflect_tail(p);
    if !in_class(&image, &[1, 2, 4, 3]) {
        return Err(BijectionError::Internal(format!("{p} reflects to {image}, outside D4(1243)")));
    }
    Ok(image)
}

pub fn reflect_1243_to_1324(p: &Permutation) -> Result<Permutation, BijectionError> {
    require(in_class(p, &[1, 2, 4, 3]), p, "D4(1243)")?;
    let image = reflect_tail(p);
    if !in_class(&image, &[1, 3, 2, 4]) {
        return Err(BijectionError::Internal(format!("{p} reflects to {image}, outside D4(1324)")));
    }
    Ok(image)
}

/// Parameters of a member of `D4(1324)` of size `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Avoider1324 {
    Identity,
    /// `p(2n) = 2k` and `p(l) = 2n`, every other entry increasing.
    Shifted { k: usize, l: usize },
}

impl Avoider1324 {
    /// Every parameter choice for size `2n`; there are `n^2 - n + 1`.
    pub fn all(n: usize) -> Vec<Avoider1324> {
        let mut out = vec![Avoider1324::Identity];
        for k in 1..n {
            for l in 2 * k..2 * n {
                out.push(Avoider1324::Shifted { k, l });
            }
        }
        out
    }
}

pub fn construct_1324_avoider(n: usize, which: Avoider1324) -> Result<Permutation, BijectionError> {
    let size = 2 * n;
    let (k, l) = match which {
        Avoider1324::Identity => return Ok(Permutation::identity(size)),
        Avoider1324::Shifted { k, l } => (k, l),
    };
    if !(1..n).contains(&k) || !(2 * k..size).contains(&l) {
        return Err(BijectionError::OutOfRange(format!(
            "need 1 <= k <= n-1 and 2k <= l <= 2n-1, got n={n}, k={k}, l={l}"
        )));
    }
    let mut word = vec![0u8; size];
    word[size - 1] = (2 * k) as u8;
    word[l - 1] = size as u8;
    let mut rest = (1..size).filter(|&v| v != 2 * k);
    for slot in word.iter_mut().filter(|w| **w == 0) {
        *slot = rest.next().unwrap() as u8;
    }
    let p = Permutation::from_trusted(&word);
    if !in_class(&p, &[1, 3, 2, 4]) {
        return Err(BijectionError::Internal(format!("{p} is not in D4(1324)")));
    }
    Ok(p)
}
