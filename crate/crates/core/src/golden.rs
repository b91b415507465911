//! Reference values vendored as plain text under `golden/`.

use std::cmp::Ordering;

use crate::dumont::DumontKind;
use crate::patterns::ClassicalPattern;
use crate::perm::Permutation;

const D1_TABLE: &str = include_str!("../golden/d1_2143_3421.txt");
const CUM_DIST: &str = include_str!("../golden/cum_dist.txt");
const A343795: &str = include_str!("../golden/a343795.txt");
const AVOIDER_SETS: &str = include_str!("../golden/avoider_sets.txt");

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(text: &str) -> Vec<u64> {
    text.split_whitespace()
        .map(|t| t.parse().expect("golden file holds integers"))
        .collect()
}

/// `(n, |D1_2n(2143)|, |D1_2n(3421)|)` for `n = 0..=10`.
pub fn d1_2143_3421() -> Vec<(usize, u64, u64)> {
    data_lines(D1_TABLE)
        .map(|l| {
            let v = numbers(l);
            (v[0] as usize, v[1], v[2])
        })
        .collect()
}

/// Initial terms of `|D4_2n(1423)|`.
pub fn a343795() -> Vec<u64> {
    data_lines(A343795).flat_map(numbers).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenDistribution {
    pub n: usize,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub relation: Vec<Ordering>,
}

pub fn distributions() -> Vec<GoldenDistribution> {
    let mut out: Vec<GoldenDistribution> = Vec::new();
    for line in data_lines(CUM_DIST) {
        let (tag, rest) = line.split_once(' ').unwrap_or((line, ""));
        match tag {
            "n" => out.push(GoldenDistribution {
                n: rest.trim().parse().expect("distribution size"),
                a: Vec::new(),
                b: Vec::new(),
                relation: Vec::new(),
            }),
            "a" => out.last_mut().unwrap().a = numbers(rest),
            "b" => out.last_mut().unwrap().b = numbers(rest),
            "rel" => {
                out.last_mut().unwrap().relation = rest
                    .split_whitespace()
                    .map(|s| match s {
                        "<" => Ordering::Less,
                        "=" => Ordering::Equal,
                        ">" => Ordering::Greater,
                        other => panic!("bad relation symbol {other}"),
                    })
                    .collect()
            }
            other => panic!("bad tag {other} in distribution golden file"),
        }
    }
    out
}

pub fn distribution(n: usize) -> Option<GoldenDistribution> {
    distributions().into_iter().find(|d| d.n == n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenSet {
    pub kind: DumontKind,
    pub patterns: Vec<ClassicalPattern>,
    pub size: usize,
    pub members: Vec<Permutation>,
}

/// Explicit avoider sets.
pub fn avoider_sets() -> Vec<GoldenSet> {
    data_lines(AVOIDER_SETS)
        .map(|l| {
            let (head, members) = l.split_once(':').expect("golden set line has a colon");
            let mut head = head.split_whitespace();
            let kind = head.next().unwrap().parse().expect("kind");
            let patterns = ClassicalPattern::parse_list(head.next().unwrap()).expect("patterns");
            let size = head.next().unwrap().parse().expect("size");
            let members = members
                .split_whitespace()
                .map(|m| m.parse().expect("member"))
                .collect();
            GoldenSet {
                kind,
                patterns,
                size,
                members,
            }
        })
        .collect()
}
