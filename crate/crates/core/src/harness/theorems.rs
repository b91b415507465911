//! The results each suite checks, as data.

use crate::dumont::DumontKind::{self, D1, D2, D4};
use crate::gfseries::SequenceId::{self, *};
use crate::golden;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy)]
pub(crate) enum Restrict {
    Avoid(&'static [&'static str]),
    Exactly(&'static str, u64),
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Expected {
    Closed(SequenceId),
    /// Explicit member list, defined from `min_n` on.
    Set { min_n: u64, members: fn(usize) -> Option<Vec<Permutation>> },
    /// Same set as another restriction on the same kind.
    SameSetAs(&'static [&'static str]),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Theorem {
    pub label: &'static str,
    pub kind: DumontKind,
    pub restrict: Restrict,
    pub expected: Expected,
}

const fn avoid(label: &'static str, kind: DumontKind, pats: &'static [&'static str], id: SequenceId) -> Theorem {
    Theorem {
        label,
        kind,
        restrict: Restrict::Avoid(pats),
        expected: Expected::Closed(id),
    }
}

const fn once(label: &'static str, kind: DumontKind, pat: &'static str, id: SequenceId) -> Theorem {
    Theorem {
        label,
        kind,
        restrict: Restrict::Exactly(pat, 1),
        expected: Expected::Closed(id),
    }
}

const fn set(
    label: &'static str,
    kind: DumontKind,
    pats: &'static [&'static str],
    min_n: u64,
    members: fn(usize) -> Option<Vec<Permutation>>,
) -> Theorem {
    Theorem {
        label,
        kind,
        restrict: Restrict::Avoid(pats),
        expected: Expected::Set { min_n, members },
    }
}

/// `2 1 4 3 ... 2n 2n-1`.
pub(crate) fn pair_swaps(n: usize) -> Option<Vec<Permutation>> {
    let word: Vec<u8> = (1..=n as u8).flat_map(|k| [2 * k, 2 * k - 1]).collect();
    Some(vec![Permutation::new(word).expect("pair swaps form a permutation")])
}

fn golden_set(kind: DumontKind, pattern: &str, size: usize) -> Option<Vec<Permutation>> {
    golden::avoider_sets()
        .into_iter()
        .find(|g| g.kind == kind && g.size == size && g.patterns.len() == 1 && g.patterns[0].to_string() == pattern)
        .map(|g| g.members)
}

/// `(2n-1, 2n, 2n-3, 2n-2, ..., 7, 8, p)` for `p` in `D1_6(123)`.
pub(crate) fn d1_123_set(n: usize) -> Option<Vec<Permutation>> {
    let base = golden_set(D1, "123", 6)?;
    let prefix: Vec<u8> = (4..=n as u8).rev().flat_map(|j| [2 * j - 1, 2 * j]).collect();
    let mut out: Vec<Permutation> = base
        .iter()
        .map(|p| {
            let mut w = prefix.clone();
            w.extend_from_slice(p.values());
            Permutation::new(w).expect("prefix and tail are disjoint")
        })
        .collect();
    out.sort();
    Some(out)
}

fn d4_1234_set(n: usize) -> Option<Vec<Permutation>> {
    if n >= 4 {
        return Some(Vec::new());
    }
    golden_set(D4, "1234", 2 * n)
}

pub(crate) const D1_LEN3: &[Theorem] = &[
    avoid("D1(132)", D1, &["132"], D1Avoid132),
    avoid("D1(231)", D1, &["231"], D1Avoid231),
    avoid("D1(312)", D1, &["312"], D1Avoid312),
    avoid("D1(213)", D1, &["213"], D1Avoid213),
    avoid("D1(321)", D1, &["321"], D1Avoid321),
    set("D1(321) set", D1, &["321"], 0, pair_swaps),
    avoid("D1(123)", D1, &["123"], D1Avoid123),
    set("D1(123) set", D1, &["123"], 3, d1_123_set),
];

pub(crate) const D2_LEN3: &[Theorem] = &[
    avoid("D2(123)", D2, &["123"], D2Avoid123),
    avoid("D2(132)", D2, &["132"], D2Avoid132),
    avoid("D2(213)", D2, &["213"], D2Avoid213),
    avoid("D2(231)", D2, &["231"], D2Avoid231),
    avoid("D2(312)", D2, &["312"], D2Avoid312),
    set("D2(312) set", D2, &["312"], 0, pair_swaps),
    avoid("D2(321)", D2, &["321"], D2Avoid321),
];

pub(crate) const D2_LEN4: &[Theorem] = &[
    avoid("D2(3142)", D2, &["3142"], D2Avoid3142),
    avoid("D2(4132)", D2, &["4132"], D2Avoid4132),
    Theorem {
        label: "D2(4132) = D2(321)",
        kind: D2,
        restrict: Restrict::Avoid(&["4132"]),
        expected: Expected::SameSetAs(&["321"]),
    },
    avoid("D2(2143)", D2, &["2143"], D2Avoid2143),
];

pub(crate) const D1_PAIRS: &[Theorem] = &[
    avoid("D1(1342,1423)", D1, &["1342", "1423"], D1Avoid1342_1423),
    avoid("D1(2341,2413)", D1, &["2341", "2413"], D1Avoid2341_2413),
    avoid("D1(1342,2413)", D1, &["1342", "2413"], D1Avoid1342_2413),
    avoid("D1(231,4213)", D1, &["231", "4213"], D1Avoid231_4213),
    set("D1(231,4213) set", D1, &["231", "4213"], 1, pair_swaps),
    avoid("D1(1342,4213)", D1, &["1342", "4213"], D1Avoid1342_4213),
    avoid("D1(2341,1423)", D1, &["2341", "1423"], D1Avoid2341_1423),
];

pub(crate) const D4_AVOID: &[Theorem] = &[
    avoid("D4(1234)", D4, &["1234"], D4Avoid1234),
    set("D4(1234) set", D4, &["1234"], 0, d4_1234_set),
    avoid("D4(1342)", D4, &["1342"], D4Avoid1342),
    avoid("D4(1432)", D4, &["1432"], D4Avoid1432),
    avoid("D4(1324)", D4, &["1324"], D4Avoid1324),
    avoid("D4(1243)", D4, &["1243"], D4Avoid1243),
    avoid("D4(1423)", D4, &["1423"], D4Avoid1423),
];

pub(crate) const D4_SINGLE: &[Theorem] = &[once("D4(321;1)", D4, "321", D4Single321)];

pub(crate) const D1D2_SINGLE: &[Theorem] = &[
    once("D1(132;1)", D1, "132", D1Single132),
    once("D1(312;1)", D1, "312", D1Single312),
    once("D1(231;1)", D1, "231", D1Single231),
    once("D1(213;1)", D1, "213", D1Single213),
    once("D1(321;1)", D1, "321", D1Single321),
    once("D2(321;1)", D2, "321", D2Single321),
    once("D2(3142;1)", D2, "3142", D2Single3142),
    once("D2(2143;1)", D2, "2143", D2Single2143),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_sets() {
        let s = d1_123_set(4).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.contains(&"78436215".parse().unwrap()));
        assert_eq!(pair_swaps(2).unwrap(), vec!["2143".parse::<Permutation>().unwrap()]);
        assert_eq!(d4_1234_set(3).unwrap().len(), 4);
        assert!(d4_1234_set(5).unwrap().is_empty());
    }
}
