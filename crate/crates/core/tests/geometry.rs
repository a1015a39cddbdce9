use std::collections::BTreeSet;

use proptest::prelude::*;

use veronese_core::geometry::{
    fat_points_ideal, is_sequentially_cm, non_general_fixture, stanley_reisner_ideal, FatPointScheme,
    SimplicialComplexSpec,
};
use veronese_core::oracle::{betti, is_componentwise_linear, multiplicity};
use veronese_core::FieldChoice;

const GF: FieldChoice = FieldChoice::Prime(32003);

#[test]
fn simple_point_is_its_linear_ideal() {
    // one reduced point in P^2: the ideal of two coordinates
    let s = FatPointScheme::new(&[2], vec![1]).unwrap();
    let i = fat_points_ideal(&s);
    assert_eq!(i.to_string(), "(x1_1, x1_2)");
    assert_eq!(multiplicity(&i).unwrap().multiplicity, 1);
}

#[test]
fn fat_point_multiplicity_in_projective_space() {
    // a point of multiplicity a in P^n has degree C(n + a - 1, n)
    for (n, a, e) in [(1usize, 3u32, 3u64), (2, 2, 3), (2, 3, 6), (3, 2, 4)] {
        let s = FatPointScheme::new(&[n], vec![a]).unwrap();
        assert_eq!(multiplicity(&fat_points_ideal(&s)).unwrap().multiplicity, e, "n={n} a={a}");
    }
}

#[test]
fn coordinate_points_are_componentwise_linear_but_the_square_is_not() {
    for dims in [[1usize, 1], [1, 2], [2, 2]] {
        let s = FatPointScheme::new(&dims, vec![2, 1]).unwrap();
        assert!(is_componentwise_linear(&fat_points_ideal(&s), GF).unwrap().componentwise_linear);
    }
    assert!(!is_componentwise_linear(&non_general_fixture(), GF).unwrap().componentwise_linear);
}

#[test]
fn seq_cm_rejects_two_disjoint_edges() {
    // pure and disconnected, so not CM; for pure complexes the notions agree
    let spec = SimplicialComplexSpec::from_one_based(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]).unwrap();
    assert!(!is_sequentially_cm(&spec, GF).unwrap().componentwise_linear);
}

#[test]
fn seq_cm_accepts_edge_plus_isolated_vertex() {
    let spec = SimplicialComplexSpec::from_one_based(3, &[&[1, 3], &[2, 3]]).unwrap();
    assert!(is_sequentially_cm(&spec, GF).unwrap().componentwise_linear);
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplexSpec> {
    (2usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 0..=4)))
        .prop_filter_map("nonfaces must form an antichain", |(n, sets)| {
            let mut uniq: Vec<BTreeSet<usize>> = Vec::new();
            for s in sets {
                if !uniq.contains(&s) {
                    uniq.push(s);
                }
            }
            SimplicialComplexSpec::new(n, uniq).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Stanley-Reisner ideals of complexes with at most one nonface are
    // principal or zero, hence always sequentially CM.
    #[test]
    fn principal_stanley_reisner_is_seq_cm(spec in arb_complex()) {
        if spec.nonfaces().len() <= 1 {
            prop_assert!(is_sequentially_cm(&spec, GF).unwrap().componentwise_linear);
        }
    }

    #[test]
    fn stanley_reisner_generators_are_the_nonfaces(spec in arb_complex()) {
        let i = stanley_reisner_ideal(&spec);
        prop_assert_eq!(i.ngens(), spec.nonfaces().len());
        prop_assert!(i.is_squarefree());
        if !i.is_zero() {
            prop_assert!(betti(&i, GF).is_ok());
        }
    }
}
