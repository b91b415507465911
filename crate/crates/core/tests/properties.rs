use dumont::bijections::{
    composition_to_d4_1342, d4_1342_to_composition, d4_321_to_dyck, dyck_to_d4_321, foata, foata_inverse,
    reflect_1243_to_1324, reflect_1324_to_1243,
};
use dumont::dumont::{generate_vec, is_dumont};
use dumont::patterns::{count_occurrences, generate_avoiders, AvoidanceQuery};
use dumont::{ClassicalPattern, Composition, DumontKind, DyckPath, Permutation};
use proptest::prelude::*;

fn perm(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pattern() -> impl Strategy<Value = ClassicalPattern> {
    (1..=4usize)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| ClassicalPattern::new(Permutation::new(v).unwrap()).unwrap())
}

fn pick<T: Clone + std::fmt::Debug>(items: Vec<T>) -> impl Strategy<Value = T> {
    (0..items.len()).prop_map(move |i| items[i].clone())
}

fn symmetric(q: &ClassicalPattern, f: fn(&Permutation) -> Permutation) -> ClassicalPattern {
    ClassicalPattern::new(f(q.perm())).unwrap()
}

proptest! {
    #[test]
    fn symmetries_are_involutions(p in perm(12)) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.complement().complement(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.antidiagonal_reflection(), p.reverse().complement().inverse());
    }

    #[test]
    fn occurrence_counts_respect_symmetry(p in perm(10), q in pattern()) {
        let c = count_occurrences(&p, &q).unwrap();
        prop_assert_eq!(count_occurrences(&p.reverse(), &symmetric(&q, Permutation::reverse)).unwrap(), c);
        prop_assert_eq!(count_occurrences(&p.complement(), &symmetric(&q, Permutation::complement)).unwrap(), c);
        prop_assert_eq!(count_occurrences(&p.inverse(), &symmetric(&q, Permutation::inverse)).unwrap(), c);
    }

    #[test]
    fn foata_roundtrips(p in perm(12)) {
        prop_assert_eq!(foata_inverse(&foata(&p)), p.clone());
        prop_assert_eq!(foata(&foata_inverse(&p)), p);
    }

    #[test]
    fn foata_carries_d1_to_d2(p in pick(generate_vec(DumontKind::D1, 8).unwrap())) {
        prop_assert!(is_dumont(DumontKind::D2, &foata(&p)).unwrap());
    }

    #[test]
    fn foata_carries_d3_to_d4(p in pick(generate_vec(DumontKind::D3, 8).unwrap())) {
        prop_assert!(is_dumont(DumontKind::D4, &foata(&p)).unwrap());
    }

    #[test]
    fn dyck_roundtrip(path in pick(DyckPath::all(7))) {
        let p = dyck_to_d4_321(&path).unwrap();
        prop_assert_eq!(d4_321_to_dyck(&p).unwrap(), path);
    }

    #[test]
    fn composition_roundtrip(c in pick(Composition::all(7))) {
        let p = composition_to_d4_1342(&c).unwrap();
        prop_assert_eq!(d4_1342_to_composition(&p).unwrap(), c);
    }

    #[test]
    fn reflection_roundtrip(p in pick(
        generate_avoiders(&AvoidanceQuery::avoiding(DumontKind::D4, 8, vec!["1324".parse().unwrap()]).unwrap()).unwrap()
    )) {
        let q = reflect_1324_to_1243(&p).unwrap();
        prop_assert_eq!(reflect_1243_to_1324(&q).unwrap(), p);
    }
}
