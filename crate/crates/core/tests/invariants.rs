use std::collections::BTreeSet;

use proptest::prelude::*;

use veronese_core::betti::{BettiTable, GradingKind};
use veronese_core::linearity::{
    is_polymatroidal, linear_quotients_in_order, search_linear_quotients, sort_generators, OrderDirection,
};
use veronese_core::oracle::{
    betti, hilbert_numerator_inclusion_exclusion, hilbert_numerator_recursive, is_componentwise_linear,
    koszul_betti, multiplicity, multiplicity_upper_bound_check, taylor_betti,
};
use veronese_core::{veronese_ideal, FieldChoice, Monomial, MonomialIdeal, RingCtx, VeroneseComponent, VeroneseSpec};

const GF: FieldChoice = FieldChoice::Prime(32003);

fn total(t: &BettiTable) -> BettiTable {
    t.coarsen(GradingKind::Total).unwrap()
}

/// Nonzero proper ideals in `n <= 5` variables with up to 7 generators.
fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=7)))
        .prop_filter_map("needs a nonconstant generator", |(n, rows)| {
            let gens: Vec<Monomial> = rows.into_iter().map(Monomial::new).filter(|m| !m.is_one()).collect();
            if gens.is_empty() {
                return None;
            }
            MonomialIdeal::new(RingCtx::standard(n), gens).ok()
        })
}

fn arb_squarefree() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 1..=5)))
        .prop_map(|(n, sets)| {
            let gens = sets.iter().map(|s| Monomial::from_vars(n, &s.iter().copied().collect::<Vec<_>>())).collect();
            MonomialIdeal::new(RingCtx::standard(n), gens).unwrap()
        })
}

/// Products of powers of variable subsets are polymatroidal.
fn arb_veronese_product() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((prop::collection::btree_set(0..n, 1..=n), 1u32..=2), 1..=3)))
        .prop_map(|(n, factors)| {
            let ring = RingCtx::standard(n);
            factors
                .iter()
                .map(|(s, a)| MonomialIdeal::power_of_variables(ring.clone(), s, *a))
                .reduce(|x, y| x.multiply(&y).unwrap())
                .unwrap()
        })
}

/// Pairwise covering specs: every two supports together use all variables.
fn arb_covering_spec() -> impl Strategy<Value = VeroneseSpec> {
    (2usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((prop::collection::btree_set(0..n, 1..=n), 1u32..=3), 1..=3)))
        .prop_filter_map("supports must cover pairwise", |(n, comps)| {
            let ring = RingCtx::standard(n);
            let comps: Vec<VeroneseComponent> =
                comps.into_iter().map(|(support, power)| VeroneseComponent { support, power }).collect();
            let spec = VeroneseSpec::new(ring, comps).ok()?;
            spec.pairwise_covering().then_some(spec)
        })
}

/// `K(t) = 1 - sum_i (-1)^i sum_j beta_{i,j}(I) t^j`
fn numerator_from_betti(t: &BettiTable) -> Vec<i64> {
    let mut k = vec![1i64];
    for (i, j, r) in t.total_triples() {
        if k.len() <= j as usize {
            k.resize(j as usize + 1, 0);
        }
        let sign = if i % 2 == 0 { -1 } else { 1 };
        k[j as usize] += sign * r as i64;
    }
    while k.len() > 1 && *k.last().unwrap() == 0 {
        k.pop();
    }
    k
}

#[test]
fn small_known_tables() {
    let ring = RingCtx::standard(4);
    let m = |v: &[usize]| Monomial::from_vars(4, v);
    // four-cycle = (x1, x3)(x2, x4): linear
    let c4 = MonomialIdeal::new(ring.clone(), vec![m(&[0, 1]), m(&[1, 2]), m(&[2, 3]), m(&[0, 3])]).unwrap();
    let t = total(&betti(&c4, GF).unwrap());
    assert_eq!(t.total_triples(), vec![(0, 2, 4), (1, 3, 4), (2, 4, 1)]);
    assert!(is_componentwise_linear(&c4, GF).unwrap().componentwise_linear);
    // complete intersection of two quadrics: Koszul syzygy in degree 4
    let ci = MonomialIdeal::new(ring, vec![m(&[0, 1]), m(&[2, 3])]).unwrap();
    assert_eq!(total(&betti(&ci, GF).unwrap()).total_triples(), vec![(0, 2, 2), (1, 4, 1)]);
    assert!(!is_componentwise_linear(&ci, GF).unwrap().componentwise_linear);
}

#[test]
fn rational_and_prime_fields_agree_on_projective_plane() {
    // the six-vertex triangulation of RP^2 has torsion, so char 2 differs
    let faces: &[[usize; 3]] = &[
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
    ];
    let n = 6;
    // Stanley-Reisner ideal: the triangles that are not faces
    let mut gens = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !faces.iter().any(|f| f.contains(&a) && f.contains(&b) && f.contains(&c)) {
                    gens.push(Monomial::from_vars(n, &[a, b, c]));
                }
            }
        }
    }
    assert_eq!(gens.len(), 10);
    let i = MonomialIdeal::new(RingCtx::standard(n), gens).unwrap();
    let q = total(&betti(&i, FieldChoice::Rational).unwrap());
    assert_eq!(q, total(&betti(&i, GF).unwrap()));
    assert_ne!(q, total(&betti(&i, FieldChoice::Prime(2)).unwrap()));
}

#[test]
fn unsupported_field_is_an_error() {
    let i = MonomialIdeal::power_of_variables(RingCtx::standard(2), &BTreeSet::from([0, 1]), 1);
    assert!(betti(&i, FieldChoice::Prime(17)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn taylor_and_koszul_agree(i in arb_ideal()) {
        prop_assert_eq!(taylor_betti(&i, GF).unwrap(), koszul_betti(&i, GF).unwrap());
    }

    #[test]
    fn hilbert_numerators_agree_with_betti(i in arb_ideal()) {
        let rec = hilbert_numerator_recursive(&i);
        prop_assert_eq!(&rec, &hilbert_numerator_inclusion_exclusion(&i).unwrap());
        prop_assert_eq!(rec, numerator_from_betti(&total(&betti(&i, GF).unwrap())));
    }

    #[test]
    fn extra_variables_change_nothing(i in arb_ideal(), extra in 1usize..=3) {
        let wide = i.extend_ring(extra);
        prop_assert_eq!(total(&betti(&i, GF).unwrap()), total(&betti(&wide, GF).unwrap()));
        prop_assert_eq!(multiplicity(&i).unwrap().multiplicity, multiplicity(&wide).unwrap().multiplicity);
    }

    #[test]
    fn linear_quotients_imply_cwl(i in arb_ideal()) {
        if search_linear_quotients(&i).unwrap().certificate().is_some() {
            prop_assert!(is_componentwise_linear(&i, GF).unwrap().componentwise_linear);
        }
    }

    #[test]
    fn cwl_ideals_meet_multiplicity_bound(i in arb_ideal()) {
        if is_componentwise_linear(&i, GF).unwrap().componentwise_linear {
            prop_assert!(multiplicity_upper_bound_check(&i, GF).unwrap().holds);
        }
    }

    #[test]
    fn alexander_dual_is_involutive(i in arb_squarefree()) {
        prop_assert_eq!(i.alexander_dual().unwrap().alexander_dual().unwrap(), i);
    }

    #[test]
    fn polymatroidal_has_revlex_linear_quotients(i in arb_veronese_product()) {
        prop_assert!(is_polymatroidal(&i).polymatroidal);
        for dir in [OrderDirection::DescendingRevlex, OrderDirection::AscendingRevlex] {
            let mut gens = i.gens().to_vec();
            sort_generators(&mut gens, dir);
            prop_assert!(linear_quotients_in_order(&gens).unwrap().verdict, "{:?}", dir);
        }
        let d = i.min_gen_degree().unwrap();
        prop_assert!(total(&betti(&i, GF).unwrap()).is_linear(d));
    }

    #[test]
    fn covering_components_are_polymatroidal(spec in arb_covering_spec()) {
        let i = veronese_ideal(&spec);
        let report = is_componentwise_linear(&i, GF).unwrap();
        prop_assert!(report.componentwise_linear);
        for c in &report.components {
            prop_assert!(is_polymatroidal(&i.degree_component(c.degree)).polymatroidal, "degree {}", c.degree);
        }
    }

    #[test]
    fn intersection_is_commutative_and_contains_products(a in arb_squarefree(), b in arb_squarefree()) {
        if a.ring().nvars() == b.ring().nvars() {
            let ab = a.intersect(&b).unwrap();
            prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
            for g in a.multiply(&b).unwrap().gens() {
                prop_assert!(ab.contains(g));
            }
        }
    }
}
