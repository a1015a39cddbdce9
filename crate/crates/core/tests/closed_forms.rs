use std::collections::BTreeSet;

use proptest::prelude::*;
use rayon::prelude::*;

use veronese_core::betti::{BettiTable, GradingKind};
use veronese_core::closed_forms::{
    betti_disjoint_product_formula, betti_power_formula, betti_two_fat_points, betti_two_veronese,
    build_uv_split, classify_two_veronese, ekf_identity_check, verify_splitting, CaseTag,
};
use veronese_core::geometry::{fat_points_ideal, FatPointScheme};
use veronese_core::oracle::{betti, taylor_betti};
use veronese_core::{veronese_ideal, FieldChoice, MonomialIdeal, RingCtx, VeroneseComponent, VeroneseSpec};

const GF: FieldChoice = FieldChoice::Prime(32003);

fn oracle(i: &MonomialIdeal) -> BettiTable {
    betti(i, GF).unwrap().coarsen(GradingKind::Total).unwrap()
}

fn two(n: usize, j: &BTreeSet<usize>, k: &BTreeSet<usize>, a: u32, b: u32) -> MonomialIdeal {
    let spec = VeroneseSpec::new(
        RingCtx::standard(n),
        vec![
            VeroneseComponent { support: j.clone(), power: a },
            VeroneseComponent { support: k.clone(), power: b },
        ],
    )
    .unwrap();
    veronese_ideal(&spec)
}

fn nonempty_subset(n: usize) -> impl Strategy<Value = BTreeSet<usize>> {
    prop::collection::btree_set(0..n, 1..=n)
}

#[test]
fn power_formula_small_table() {
    // (x, y)^2 = (x^2, xy, y^2): 3 generators, 2 linear syzygies
    let t = betti_power_formula(2, 2).unwrap();
    assert_eq!(t.total_triples(), vec![(0, 2, 3), (1, 3, 2)]);
}

#[test]
fn power_formula_matches_taylor() {
    for n in 1..=4u32 {
        for a in 1..=3u32 {
            let j: BTreeSet<usize> = (0..n as usize).collect();
            let i = MonomialIdeal::power_of_variables(RingCtx::standard(n as usize), &j, a);
            if i.ngens() > 16 {
                continue;
            }
            let t = taylor_betti(&i, GF).unwrap().coarsen(GradingKind::Total).unwrap();
            assert_eq!(betti_power_formula(n, a).unwrap(), t, "n={n} a={a}");
        }
    }
}

#[test]
fn disjoint_product_is_tensor_of_powers() {
    // (x1, x2) * (x3) is a shift of (x1, x2)
    let t = betti_disjoint_product_formula(&[2, 1], &[1, 1]).unwrap();
    assert_eq!(t.total_triples(), vec![(0, 2, 2), (1, 3, 1)]);
    let ring = RingCtx::standard(5);
    let p = MonomialIdeal::power_of_variables(ring.clone(), &[0, 1].into(), 2)
        .multiply(&MonomialIdeal::power_of_variables(ring, &[2, 3, 4].into(), 1))
        .unwrap();
    assert_eq!(betti_disjoint_product_formula(&[2, 3], &[2, 1]).unwrap(), oracle(&p));
}

#[test]
fn each_case_is_reached() {
    let s = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
    let tag = |j: &[usize], k: &[usize], a, b| classify_two_veronese(&s(j), &s(k), a, b).unwrap().tag;
    assert_eq!(tag(&[0, 1], &[2], 2, 1), CaseTag::Disjoint);
    assert_eq!(tag(&[0], &[0, 1], 2, 1), CaseTag::JInsideK);
    assert_eq!(tag(&[0, 1], &[1], 2, 1), CaseTag::KInsideJ);
    assert_eq!(tag(&[0, 1], &[1, 2], 2, 1), CaseTag::General);
    // a < b swaps the roles
    let c = classify_two_veronese(&s(&[0, 1]), &s(&[1]), 1, 2).unwrap();
    assert!(c.swapped);
    assert_eq!(c.tag, CaseTag::JInsideK);
    assert!(classify_two_veronese(&s(&[]), &s(&[1]), 1, 1).is_err());
}

#[test]
fn fat_points_in_small_products() {
    // every block layout with sum of dimensions at most 6
    let layouts: &[&[usize]] = &[&[1], &[2], &[3], &[1, 1], &[1, 2], &[2, 2], &[1, 3], &[1, 1, 1], &[1, 1, 2], &[2, 2, 2], &[1, 1, 1, 1], &[3, 3]];
    layouts.par_iter().for_each(|dims| {
        // the largest layouts only up to multiplicity 2
        let top = if dims.iter().sum::<usize>() >= 6 { 2 } else { 3 };
        for a in 1..=top {
            for b in 1..=a {
                let scheme = FatPointScheme::new(dims, vec![a, b]).unwrap();
                let i = fat_points_ideal(&scheme);
                let blocks: Vec<u32> = dims.iter().map(|&d| d as u32).collect();
                assert_eq!(betti_two_fat_points(&blocks, a, b).unwrap(), oracle(&i), "dims {dims:?} a={a} b={b}");
            }
        }
    });
}

#[test]
fn fat_points_rejects_bad_input() {
    assert!(betti_two_fat_points(&[], 1, 1).is_err());
    assert!(betti_two_fat_points(&[1, 0], 1, 1).is_err());
    assert!(betti_two_fat_points(&[1], 1, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_veronese_matches_oracle(
        (n, j, k) in (2usize..=5).prop_flat_map(|n| (Just(n), nonempty_subset(n), nonempty_subset(n))),
        a in 1u32..=3,
        b in 1u32..=3,
    ) {
        let i = two(n, &j, &k, a, b);
        prop_assert_eq!(betti_two_veronese(&j, &k, a, b).unwrap(), oracle(&i));
    }

    #[test]
    fn formula_is_symmetric(
        (j, k) in (nonempty_subset(6), nonempty_subset(6)),
        a in 1u32..=4,
        b in 1u32..=4,
    ) {
        prop_assert_eq!(betti_two_veronese(&j, &k, a, b).unwrap(), betti_two_veronese(&k, &j, b, a).unwrap());
    }

    #[test]
    fn general_case_splits(
        sa in 1usize..=2, sb in 1usize..=2, sc in 1usize..=2,
        ab in (1u32..=3).prop_flat_map(|a| (Just(a), 1..=a)),
    ) {
        let (a, b) = ab;
        let n = sa + sb + sc;
        let j: BTreeSet<usize> = (0..sa).chain(sa + sb..n).collect();
        let k: BTreeSet<usize> = (sa..n).collect();
        let ring = RingCtx::standard(n);
        let i = two(n, &j, &k, a, b);
        let pair = build_uv_split(&ring, &j, &k, a, b).unwrap();
        prop_assert!(verify_splitting(&i, &pair).holds);
        prop_assert!(ekf_identity_check(&i, &pair, GF).unwrap());
        // nonzero rows of the table lie in a..a+b
        for (idx, deg, _) in oracle(&i).total_triples() {
            let row = deg - idx as u32;
            prop_assert!(row >= a && row <= a + b);
        }
    }
}
