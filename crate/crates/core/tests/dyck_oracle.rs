//! Rebuilds the `D4(321)` Dyck path from column heights, without the
//! excedance bookkeeping the library uses, and compares.

use std::collections::BTreeSet;

use dumont::bijections::{d4_321_to_dyck, dyck_to_d4_321, DyckPath, Step};
use dumont::patterns::{generate_avoiders, AvoidanceQuery};
use dumont::{DumontKind, Permutation};

/// Height of each east step of the unhalved path: one below the lowest dot
/// at or to the right of the column, where an even right-to-left minimum
/// counts one cell lower.
fn oracle(p: &Permutation) -> DyckPath {
    let n2 = p.len();
    let mut lowest = vec![0usize; n2 + 2];
    lowest[n2 + 1] = n2 + 1;
    let mut rl_min = usize::MAX;
    for j in (1..=n2).rev() {
        let v = p.at(j);
        let dot = if v < rl_min && v.is_multiple_of(2) { v - 1 } else { v };
        rl_min = rl_min.min(v);
        lowest[j] = dot.min(lowest[j + 1]);
    }
    let mut full = Vec::with_capacity(2 * n2);
    let mut norths = 0;
    for &low in &lowest[1..=n2] {
        while norths < low - 1 {
            full.push(Step::North);
            norths += 1;
        }
        full.push(Step::East);
    }
    full.resize(2 * n2, Step::North);
    DyckPath::new(full.into_iter().step_by(2).collect()).expect("halved path")
}

fn members(n2: usize) -> Vec<Permutation> {
    let q = AvoidanceQuery::avoiding(DumontKind::D4, n2, vec!["321".parse().unwrap()]).unwrap();
    generate_avoiders(&q).unwrap()
}

#[test]
fn agrees_with_height_oracle() {
    for n2 in (2..=12).step_by(2) {
        for p in members(n2) {
            assert_eq!(d4_321_to_dyck(&p).unwrap(), oracle(&p), "{p}");
        }
    }
}

#[test]
fn bijective_onto_dyck_paths() {
    for n in 0..=6 {
        let images: BTreeSet<DyckPath> = members(2 * n).iter().map(|p| d4_321_to_dyck(p).unwrap()).collect();
        let all: BTreeSet<DyckPath> = DyckPath::all(n).into_iter().collect();
        assert_eq!(images, all, "n={n}");
        for path in &all {
            assert_eq!(d4_321_to_dyck(&dyck_to_d4_321(path).unwrap()).unwrap(), *path);
        }
    }
}
