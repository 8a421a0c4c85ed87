//! Randomized structural properties of the core types.

use num_rational::BigRational;
use proptest::prelude::*;

use trikit_core::{
    enumerate_triangular, is_triangular, join, meet, odot, partition_from_line, recover_line,
    slope_sweep_triangular, BoundingWord, CuttingLine, Dominance, Partition,
};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..12u32, 0..12).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts are valid")
    })
}

fn arb_triangular(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size, any::<prop::sample::Index>()).prop_map(|(n, index)| {
        let all = enumerate_triangular(n);
        index.get(&all).clone()
    })
}

proptest! {
    #[test]
    fn prop_conjugate_involution(p in arb_partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn prop_conjugate_preserves_size(p in arb_partition()) {
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn prop_bounding_word_round_trip(p in arb_partition()) {
        let word = BoundingWord::from_partition(&p);
        prop_assert_eq!(word.decode(), p.clone());
        // South steps count the rows, east steps the first part.
        let souths = word.bits().iter().filter(|&&b| b).count();
        let easts = word.bits().len() - souths;
        prop_assert_eq!(souths, p.len());
        prop_assert_eq!(easts as u32, p.first_part());
    }

    #[test]
    fn prop_odot_associative_and_unital(
        a in arb_partition(),
        b in arb_partition(),
        c in arb_partition(),
    ) {
        let ab_c = odot(&odot(&a, &b), &c);
        let a_bc = odot(&a, &odot(&b, &c));
        prop_assert_eq!(ab_c, a_bc);
        let empty = Partition::empty();
        prop_assert_eq!(odot(&empty, &a), a.clone());
        prop_assert_eq!(odot(&a, &empty), a);
    }

    #[test]
    fn prop_containment_antisymmetric(a in arb_partition(), b in arb_partition()) {
        if a.contains(&b) && b.contains(&a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn prop_dominance_partial_order(
        n in 0..=8u32,
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        k in any::<prop::sample::Index>(),
    ) {
        let all = Partition::all_of_size(n);
        let a = i.get(&all);
        let b = j.get(&all);
        let c = k.get(&all);
        prop_assert_eq!(a.dominance_compare(a).unwrap(), Dominance::Equal);
        // Antisymmetry.
        if a.dominance_compare(b).unwrap() == Dominance::Less {
            prop_assert_eq!(b.dominance_compare(a).unwrap(), Dominance::Greater);
        }
        // Transitivity.
        if a.dominance_compare(b).unwrap() == Dominance::Less
            && b.dominance_compare(c).unwrap() == Dominance::Less
        {
            prop_assert_eq!(a.dominance_compare(c).unwrap(), Dominance::Less);
        }
    }

    #[test]
    fn prop_line_cuts_triangular(rn in 1..40u32, rd in 1..12u32, sn in 1..40u32, sd in 1..12u32) {
        let line = CuttingLine::new(
            BigRational::new(rn.into(), rd.into()),
            BigRational::new(sn.into(), sd.into()),
        ).expect("positive intercepts");
        let p = partition_from_line(&line).expect("small lines fit in u32 parts");
        prop_assert!(is_triangular(&p), "line cut out {}", p);
    }

    #[test]
    fn prop_recover_line_round_trip(p in arb_triangular(20)) {
        let line = recover_line(&p).expect("triangular input");
        prop_assert_eq!(partition_from_line(&line).expect("recovered line fits"), p);
    }

    #[test]
    fn prop_sweep_oracle_agrees(p in arb_partition()) {
        prop_assert_eq!(slope_sweep_triangular(&p), is_triangular(&p));
    }

    #[test]
    fn prop_lattice_laws(a in arb_triangular(9), b in arb_triangular(9)) {
        let ab_join = join(&a, &b).expect("triangular inputs");
        let ab_meet = meet(&a, &b).expect("triangular inputs");
        prop_assert_eq!(&join(&b, &a).expect("triangular inputs"), &ab_join);
        prop_assert_eq!(&meet(&b, &a).expect("triangular inputs"), &ab_meet);
        prop_assert!(ab_join.contains(&a) && ab_join.contains(&b));
        prop_assert!(a.contains(&ab_meet) && b.contains(&ab_meet));
        // Absorption.
        prop_assert_eq!(join(&a, &ab_meet).expect("triangular inputs"), a.clone());
        prop_assert_eq!(meet(&a, &ab_join).expect("triangular inputs"), a);
    }
}
