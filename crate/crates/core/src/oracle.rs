//! Brute-force multigraded Betti numbers and the invariants derived from
//! them.
//!
//! Two independent homology routes are provided:
//!
//! * [`taylor_betti`] tensors the Taylor resolution of `R/I` with the
//!   residue field and takes homology one multidegree at a time. Its size
//!   is exponential in the number of generators, so it is capped.
//! * [`koszul_betti`] uses the upper Koszul simplicial complex
//!   `K^μ(I) = {F ⊆ supp μ : x^μ / x^F ∈ I}`, whose reduced homology
//!   `H̃_{i-1}` is `β_{i,μ}(I)`. Only multidegrees in the lcm lattice can
//!   carry Betti numbers, so the lattice is enumerated by closure. This
//!   route has no generator cap and backs [`betti`].
//!
//! Both routes compute ranks exactly over a prime field or over `Q`.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, Grading};
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseRow};
use crate::ring::{Monomial, MonomialIdeal};
use crate::scalar::{Field, FieldChoice, Fp};

/// Largest generator count accepted by the Taylor route.
pub const DEFAULT_SUBSET_CAP: usize = 22;

/// Runs `$body` with `$f` bound to the field type selected by `$choice`.
macro_rules! with_field {
    ($choice:expr, $f:ident => $body:expr) => {
        match $choice {
            FieldChoice::Rational => {
                type $f = BigRational;
                $body
            }
            FieldChoice::Prime(2) => {
                type $f = Fp<2>;
                $body
            }
            FieldChoice::Prime(3) => {
                type $f = Fp<3>;
                $body
            }
            FieldChoice::Prime(5) => {
                type $f = Fp<5>;
                $body
            }
            FieldChoice::Prime(7) => {
                type $f = Fp<7>;
                $body
            }
            FieldChoice::Prime(11) => {
                type $f = Fp<11>;
                $body
            }
            FieldChoice::Prime(13) => {
                type $f = Fp<13>;
                $body
            }
            FieldChoice::Prime(101) => {
                type $f = Fp<101>;
                $body
            }
            FieldChoice::Prime(32003) => {
                type $f = Fp<32003>;
                $body
            }
            FieldChoice::Prime(65521) => {
                type $f = Fp<65521>;
                $body
            }
            FieldChoice::Prime(p) => return Err(Error::UnsupportedField(p)),
        }
    };
}

fn fine_grading(ideal: &MonomialIdeal) -> Grading {
    Grading::Fine {
        blocks: ideal.ring().blocks().to_vec(),
    }
}

/// Tables for the zero and unit ideals, which both routes special-case.
fn degenerate_table(ideal: &MonomialIdeal) -> Option<BettiTable> {
    if ideal.is_zero() {
        return Some(BettiTable::new(fine_grading(ideal)));
    }
    if ideal.is_unit() {
        let mut t = BettiTable::new(fine_grading(ideal));
        t.add(0, vec![0; ideal.ring().nvars()], 1);
        return Some(t);
    }
    None
}

/// Fine-graded Betti table of `I` from the Taylor complex, with the default
/// generator cap.
pub fn taylor_betti(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable> {
    taylor_betti_with_cap(ideal, field, DEFAULT_SUBSET_CAP)
}

pub fn taylor_betti_with_cap(ideal: &MonomialIdeal, field: FieldChoice, cap: usize) -> Result<BettiTable> {
    if let Some(t) = degenerate_table(ideal) {
        return Ok(t);
    }
    let m = ideal.ngens();
    if m > cap || m > 63 {
        return Err(Error::Capacity {
            what: "Taylor complex generators",
            size: m,
            cap: cap.min(63),
        });
    }
    with_field!(field, F => Ok(taylor_betti_in::<F>(ideal)))
}

fn taylor_betti_in<F: Field>(ideal: &MonomialIdeal) -> BettiTable {
    let gens = ideal.gens();
    let m = gens.len();
    // Nonempty subsets grouped by lcm, built by extending each subset with
    // generators of larger index.
    let mut groups: HashMap<Monomial, Vec<u64>> = HashMap::new();
    let mut stack: Vec<(u64, usize, Monomial)> = (0..m).map(|g| (1u64 << g, g, gens[g].clone())).collect();
    while let Some((mask, last, lcm)) = stack.pop() {
        for (g, gen) in gens.iter().enumerate().skip(last + 1) {
            stack.push((mask | (1 << g), g, lcm.lcm(gen)));
        }
        groups.entry(lcm).or_default().push(mask);
    }
    let mut groups: Vec<(Monomial, Vec<u64>)> = groups.into_iter().collect();
    groups.sort_by(|a, b| a.0.cmp(&b.0));

    let results: Vec<Vec<(usize, Vec<u32>, u64)>> = groups
        .par_iter()
        .map(|(mu, subsets)| {
            taylor_homology_at::<F>(subsets)
                .into_iter()
                .map(|(i, r)| (i, mu.exponents().to_vec(), r))
                .collect()
        })
        .collect();
    let mut table = BettiTable::new(fine_grading(ideal));
    for (i, d, r) in results.into_iter().flatten() {
        table.add(i, d, r);
    }
    table
}

/// Homology of the Taylor complex restricted to subsets with a common lcm.
/// Returns `(i, β_i)` with `β_i = dim H_{i+1}`.
fn taylor_homology_at<F: Field>(subsets: &[u64]) -> Vec<(usize, u64)> {
    let mut by_size: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for &s in subsets {
        by_size.entry(s.count_ones() as usize).or_default().push(s);
    }
    for v in by_size.values_mut() {
        v.sort_unstable();
    }
    let index: HashMap<u64, usize> = by_size
        .values()
        .flat_map(|v| v.iter().enumerate().map(|(k, &s)| (s, k)))
        .collect();
    let max_size = *by_size.keys().max().unwrap_or(&0);
    // rank of the boundary from size k to size k-1
    let mut ranks = vec![0usize; max_size + 2];
    #[allow(clippy::needless_range_loop)]
    for k in 2..=max_size {
        let (Some(src), Some(dst)) = (by_size.get(&k), by_size.get(&(k - 1))) else {
            continue;
        };
        let rows: Vec<SparseRow> = src
            .iter()
            .map(|&s| {
                let mut row = Vec::new();
                let mut pos = 0;
                let mut bits = s;
                while bits != 0 {
                    let g = bits.trailing_zeros();
                    bits &= bits - 1;
                    let face = s & !(1 << g);
                    if let Some(&col) = index.get(&face) {
                        // faces absent from `index` have a smaller lcm and
                        // vanish after tensoring with the residue field
                        if dst.get(col) == Some(&face) {
                            row.push((col, if pos % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    pos += 1;
                }
                row.sort_unstable();
                row
            })
            .collect();
        ranks[k] = rank::<F>(&rows, dst.len());
    }
    let mut out = Vec::new();
    for (&k, v) in &by_size {
        let h = v.len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0);
        if h > 0 {
            out.push((k - 1, h as u64));
        }
    }
    out
}

/// The lcm lattice of the generators (without the bottom element).
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                if g.divides(m) {
                    continue;
                }
                let l = m.lcm(g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// Fine-graded Betti table of `I` from upper Koszul simplicial complexes.
pub fn koszul_betti(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable> {
    if let Some(t) = degenerate_table(ideal) {
        return Ok(t);
    }
    if ideal.ring().nvars() > 24 {
        return Err(Error::Capacity {
            what: "Koszul complex variables",
            size: ideal.ring().nvars(),
            cap: 24,
        });
    }
    with_field!(field, F => Ok(koszul_betti_in::<F>(ideal)))
}

fn koszul_betti_in<F: Field>(ideal: &MonomialIdeal) -> BettiTable {
    let lattice = lcm_lattice(ideal);
    let gens = ideal.gens();
    let results: Vec<Vec<(usize, Vec<u32>, u64)>> = lattice
        .par_iter()
        .map(|mu| {
            koszul_homology_at::<F>(gens, mu)
                .into_iter()
                .map(|(i, r)| (i, mu.exponents().to_vec(), r))
                .collect()
        })
        .collect();
    let mut table = BettiTable::new(fine_grading(ideal));
    for (i, d, r) in results.into_iter().flatten() {
        table.add(i, d, r);
    }
    table
}

/// `(i, dim H̃_{i-1}(K^μ))` for the nonzero homology of the upper Koszul
/// complex at `mu`.
fn koszul_homology_at<F: Field>(gens: &[Monomial], mu: &Monomial) -> Vec<(usize, u64)> {
    let support = mu.support();
    let v = support.len();
    // For each generator dividing mu, the variables where it is tight:
    // x^mu / x^F lies in I iff F avoids the tight set of some divisor.
    let mut tight: Vec<u32> = gens
        .iter()
        .filter(|g| g.divides(mu))
        .map(|g| {
            support
                .iter()
                .enumerate()
                .filter(|(_, &var)| g.exp(var) == mu.exp(var))
                .fold(0u32, |acc, (k, _)| acc | (1 << k))
        })
        .collect();
    tight.sort_unstable();
    tight.dedup();
    let minimal: Vec<u32> = tight
        .iter()
        .copied()
        .filter(|&t| !tight.iter().any(|&s| s != t && s & t == s))
        .collect();

    let mut faces_by_size: Vec<Vec<u32>> = vec![Vec::new(); v + 1];
    for f in 0u32..(1u32 << v) {
        if minimal.iter().any(|&t| t & f == 0) {
            faces_by_size[f.count_ones() as usize].push(f);
        }
    }
    // Reduced chain complex: faces of size s sit in degree s - 1.
    let index: HashMap<u32, usize> = faces_by_size
        .iter()
        .flat_map(|fs| fs.iter().enumerate().map(|(k, &f)| (f, k)))
        .collect();
    let mut ranks = vec![0usize; v + 2];
    for s in 1..=v {
        if faces_by_size[s].is_empty() || faces_by_size[s - 1].is_empty() {
            continue;
        }
        let rows: Vec<SparseRow> = faces_by_size[s]
            .iter()
            .map(|&f| {
                let mut row = Vec::with_capacity(s);
                let mut bits = f;
                let mut pos = 0;
                while bits != 0 {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    let col = index[&(f & !(1 << b))];
                    row.push((col, if pos % 2 == 0 { 1 } else { -1 }));
                    pos += 1;
                }
                row.sort_unstable();
                row
            })
            .collect();
        ranks[s] = rank::<F>(&rows, faces_by_size[s - 1].len());
    }
    let mut out = Vec::new();
    for s in 0..=v {
        let n = faces_by_size[s].len();
        if n == 0 {
            continue;
        }
        let h = n - ranks[s] - ranks[s + 1];
        if h > 0 {
            // H̃_{s-1} gives β_s
            out.push((s, h as u64));
        }
    }
    out
}

/// The Betti oracle used throughout the crate (Koszul route, uncapped).
pub fn betti(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable> {
    koszul_betti(ideal, field)
}

/// Total-graded Betti table from the oracle.
pub fn betti_total(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable> {
    betti(ideal, field)?.coarsen(crate::betti::GradingKind::Total)
}

/// True iff all generators share one degree `d` and `β_{i,j} = 0` for
/// `j != i + d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldChoice) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    let d = ideal.min_gen_degree().expect("nonzero");
    Ok(betti(ideal, field)?.is_linear(d))
}

/// Per-degree outcome of a componentwise-linearity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub degree: u32,
    pub generators: usize,
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwlReport {
    pub componentwise_linear: bool,
    pub regularity: i64,
    pub components: Vec<ComponentReport>,
    /// First degree whose component fails to have a linear resolution.
    pub failing_degree: Option<u32>,
}

/// Tests `(I_d)` for every `d` from the least generator degree up to
/// `reg(I)`; above the regularity every component is linear.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: FieldChoice) -> Result<CwlReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let table = betti(ideal, field)?;
    let reg = table.regularity().expect("nonzero ideal has entries");
    let alpha = ideal.min_gen_degree().expect("nonzero");
    let mut components = Vec::new();
    let mut failing = None;
    for d in alpha..=(reg.max(alpha as i64) as u32) {
        let comp = ideal.degree_component(d);
        let linear = has_linear_resolution(&comp, field)?;
        components.push(ComponentReport {
            degree: d,
            generators: comp.ngens(),
            linear,
        });
        if !linear && failing.is_none() {
            failing = Some(d);
        }
    }
    Ok(CwlReport {
        componentwise_linear: failing.is_none(),
        regularity: reg,
        components,
        failing_degree: failing,
    })
}

/// Integer polynomial as a coefficient list, lowest degree first.
pub type IntPoly = Vec<i64>;

fn poly_trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    if p.is_empty() {
        p.push(0);
    }
    p
}

fn poly_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k] += c;
    }
    poly_trim(out)
}

fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

/// `1 - t^d`
fn one_minus_t_pow(d: u32) -> IntPoly {
    if d == 0 {
        return vec![0];
    }
    let mut p = vec![0; d as usize + 1];
    p[0] = 1;
    p[d as usize] = -1;
    p
}

/// Numerator `K(t)` of `HS(R/I) = K(t) / (1-t)^n` by inclusion-exclusion
/// over subsets of generators.
pub fn hilbert_numerator_inclusion_exclusion(ideal: &MonomialIdeal) -> Result<IntPoly> {
    let m = ideal.ngens();
    if m > DEFAULT_SUBSET_CAP {
        return Err(Error::Capacity {
            what: "inclusion-exclusion generators",
            size: m,
            cap: DEFAULT_SUBSET_CAP,
        });
    }
    let gens = ideal.gens();
    let mut coeffs: BTreeMap<u32, i64> = BTreeMap::new();
    // DFS over subsets, carrying the lcm degree vector
    let n = ideal.ring().nvars();
    let mut stack: Vec<(usize, Monomial, bool)> = vec![(0, Monomial::one(n), true)];
    while let Some((next, lcm, even)) = stack.pop() {
        *coeffs.entry(lcm.total_degree()).or_insert(0) += if even { 1 } else { -1 };
        for (g, gen) in gens.iter().enumerate().skip(next) {
            stack.push((g + 1, lcm.lcm(gen), !even));
        }
    }
    let top = coeffs.keys().max().copied().unwrap_or(0) as usize;
    let mut p = vec![0; top + 1];
    for (d, c) in coeffs {
        p[d as usize] += c;
    }
    Ok(poly_trim(p))
}

/// Same numerator by the pivot recursion `N(I) = N(I + (x)) + t N(I : x)`.
pub fn hilbert_numerator_recursive(ideal: &MonomialIdeal) -> IntPoly {
    numerator_rec(ideal.gens().to_vec())
}

fn numerator_rec(gens: Vec<Monomial>) -> IntPoly {
    let gens = crate::ring::minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    // Pairwise coprime generators: the numerator factors.
    let n = gens[0].nvars();
    let mut count = vec![0usize; n];
    for g in &gens {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let pivot = (0..n).filter(|&v| count[v] > 1).max_by_key(|&v| count[v]);
    let Some(x) = pivot else {
        return gens
            .iter()
            .fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.total_degree())));
    };
    let var = Monomial::var(n, x);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(x) == 0).cloned().collect();
    plus.push(var.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.quotient_by_gcd(&var)).collect();
    let a = numerator_rec(plus);
    let b = numerator_rec(colon);
    let mut shifted = vec![0];
    shifted.extend(b);
    poly_add(&a, &shifted)
}

/// Public numerator entry point: inclusion-exclusion when within the cap,
/// otherwise the pivot recursion.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPoly {
    match hilbert_numerator_inclusion_exclusion(ideal) {
        Ok(p) => p,
        Err(_) => hilbert_numerator_recursive(ideal),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSummary {
    pub numerator: IntPoly,
    pub codim: usize,
    pub multiplicity: u64,
}

/// Codimension and multiplicity of `R/I`: `K(t) = (1-t)^c Q(t)` and
/// `e = Q(1)`.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<HilbertSummary> {
    let codim = ideal.support_codim()?;
    let numerator = hilbert_numerator_recursive(ideal);
    let mut q = numerator.clone();
    for _ in 0..codim {
        // synthetic division by (1 - t): q = (1 - t) * s  =>  s_k = sum_{l<=k} q_l
        if q.iter().sum::<i64>() != 0 {
            return Err(Error::Internal("Hilbert numerator not divisible by (1-t)^c".into()));
        }
        let mut s = Vec::with_capacity(q.len());
        let mut acc = 0;
        for c in &q[..q.len() - 1] {
            acc += c;
            s.push(acc);
        }
        q = poly_trim(s);
    }
    let e: i64 = q.iter().sum();
    if e <= 0 {
        return Err(Error::Internal(format!("nonpositive multiplicity {e}")));
    }
    Ok(HilbertSummary {
        numerator,
        codim,
        multiplicity: e as u64,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityBoundReport {
    pub multiplicity: u64,
    pub codim: usize,
    /// `M_1..M_c`: largest shifts in the resolution of `R/I`.
    pub max_shifts: Vec<u32>,
    /// `∏ M_i / c!` as a reduced fraction `(numerator, denominator)`.
    pub bound: (String, String),
    pub holds: bool,
}

/// Checks `e(R/I) <= ∏_{i=1}^c M_i / c!` exactly.
pub fn multiplicity_upper_bound_check(ideal: &MonomialIdeal, field: FieldChoice) -> Result<MultiplicityBoundReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let summary = multiplicity(ideal)?;
    let c = summary.codim;
    let table = betti_total(ideal, field)?;
    let mut shifts = Vec::with_capacity(c);
    for i in 1..=c {
        // column i of R/I is column i-1 of I
        let m = table.max_shift(i - 1).ok_or_else(|| {
            Error::Precondition(format!("projective dimension of R/I is below the codimension {c}"))
        })?;
        shifts.push(m);
    }
    let prod: BigInt = shifts.iter().fold(BigInt::one(), |acc, &m| acc * BigInt::from(m));
    let fact: BigInt = (1..=c).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    let bound = BigRational::new(prod.clone(), fact.clone());
    let holds = BigInt::from(summary.multiplicity) * fact <= prod;
    debug_assert!(!bound.denom().is_zero());
    Ok(MultiplicityBoundReport {
        multiplicity: summary.multiplicity,
        codim: c,
        max_shifts: shifts,
        bound: (bound.numer().to_string(), bound.denom().to_string()),
        holds,
    })
}

/// `bound` from a report as an `f64`, for display only.
pub fn bound_as_f64(report: &MultiplicityBoundReport) -> Option<f64> {
    let n: BigInt = report.bound.0.parse().ok()?;
    let d: BigInt = report.bound.1.parse().ok()?;
    Some(n.to_f64()? / d.to_f64()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::GradingKind;
    use crate::ring::RingCtx;

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let ring = RingCtx::standard(n);
        MonomialIdeal::new(
            ring,
            gens.iter()
                .map(|g| Monomial::from_vars(n, &g.iter().map(|v| v - 1).collect::<Vec<_>>()))
                .collect(),
        )
        .unwrap()
    }

    const GF: FieldChoice = FieldChoice::Prime(32003);

    fn total(t: &BettiTable) -> BettiTable {
        t.coarsen(GradingKind::Total).unwrap()
    }

    #[test]
    fn complete_intersection_is_koszul() {
        let i = ideal(4, &[&[1, 3], &[2, 4]]);
        let want = BettiTable::from_total_entries([(0, 2, 2), (1, 4, 1)]);
        assert_eq!(total(&taylor_betti(&i, GF).unwrap()), want);
        assert_eq!(total(&koszul_betti(&i, GF).unwrap()), want);
    }

    #[test]
    fn square_of_three_variables() {
        let i = ideal(3, &[&[1], &[2], &[3]]).power(2).unwrap();
        let want = BettiTable::from_total_entries([(0, 2, 6), (1, 3, 8), (2, 4, 3)]);
        assert_eq!(total(&taylor_betti(&i, GF).unwrap()), want);
        assert_eq!(total(&koszul_betti(&i, FieldChoice::Rational).unwrap()), want);
    }

    #[test]
    fn principal_ideal() {
        let i = ideal(3, &[&[1, 1, 2]]);
        let want = BettiTable::from_total_entries([(0, 3, 1)]);
        assert_eq!(total(&taylor_betti(&i, GF).unwrap()), want);
        assert_eq!(total(&koszul_betti(&i, GF).unwrap()), want);
    }

    #[test]
    fn routes_agree_in_fine_grading() {
        let i = ideal(5, &[&[1, 2], &[1, 3], &[1, 5], &[2, 4], &[2, 5], &[3, 4], &[3, 5]]);
        assert_eq!(taylor_betti(&i, GF).unwrap(), koszul_betti(&i, GF).unwrap());
    }

    #[test]
    fn degenerate_ideals() {
        let r = RingCtx::standard(2);
        assert!(betti(&MonomialIdeal::zero(r.clone()), GF).unwrap().is_empty());
        let u = betti(&MonomialIdeal::unit(r.clone()), GF).unwrap();
        assert_eq!(u.get(0, &[0, 0]), 1);
        assert_eq!(taylor_betti(&MonomialIdeal::unit(r), GF).unwrap(), u);
    }

    #[test]
    fn taylor_cap_is_enforced() {
        let i = ideal(3, &[&[1], &[2], &[3]]).power(3).unwrap();
        assert!(matches!(
            taylor_betti_with_cap(&i, GF, 5),
            Err(Error::Capacity { size: 10, cap: 5, .. })
        ));
    }

    #[test]
    fn unsupported_prime() {
        let i = ideal(2, &[&[1]]);
        assert_eq!(betti(&i, FieldChoice::Prime(17)), Err(Error::UnsupportedField(17)));
    }

    #[test]
    fn linear_resolution_checks() {
        assert!(!has_linear_resolution(&ideal(4, &[&[1, 3], &[2, 4]]), GF).unwrap());
        assert!(has_linear_resolution(&ideal(2, &[&[1], &[2]]).power(2).unwrap(), GF).unwrap());
        assert!(!has_linear_resolution(&ideal(2, &[&[1], &[2, 2]]), GF).unwrap());
        assert_eq!(
            has_linear_resolution(&MonomialIdeal::zero(RingCtx::standard(2)), GF),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn cwl_examples() {
        let ci = ideal(4, &[&[1, 3], &[2, 4]]);
        let r = is_componentwise_linear(&ci, GF).unwrap();
        assert!(!r.componentwise_linear);
        assert_eq!(r.failing_degree, Some(2));
        let mixed = ideal(2, &[&[1], &[2, 2]]);
        assert!(is_componentwise_linear(&mixed, GF).unwrap().componentwise_linear);
    }

    #[test]
    fn hilbert_numerators() {
        let ci = ideal(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(hilbert_numerator_inclusion_exclusion(&ci).unwrap(), vec![1, 0, -2, 0, 1]);
        assert_eq!(hilbert_numerator_recursive(&ci), vec![1, 0, -2, 0, 1]);
        let r = RingCtx::standard(3);
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(r.clone())), vec![1]);
        assert_eq!(hilbert_numerator(&MonomialIdeal::unit(r.clone())), vec![0]);
        assert_eq!(hilbert_numerator_recursive(&MonomialIdeal::unit(r)), vec![0]);
        let e = ideal(5, &[&[1, 2], &[1, 3], &[1, 5], &[2, 4], &[2, 5], &[3, 4], &[3, 5]]);
        assert_eq!(hilbert_numerator_inclusion_exclusion(&e).unwrap(), hilbert_numerator_recursive(&e));
    }

    #[test]
    fn multiplicities() {
        let ci = multiplicity(&ideal(4, &[&[1, 3], &[2, 4]])).unwrap();
        assert_eq!((ci.codim, ci.multiplicity), (2, 4));
        let pt = multiplicity(&ideal(2, &[&[1], &[2]])).unwrap();
        assert_eq!((pt.codim, pt.multiplicity), (2, 1));
        let dbl = multiplicity(&ideal(1, &[&[1, 1]])).unwrap();
        assert_eq!((dbl.codim, dbl.multiplicity), (1, 2));
    }

    #[test]
    fn multiplicity_bound() {
        let r = multiplicity_upper_bound_check(&ideal(4, &[&[1, 3], &[2, 4]]), GF).unwrap();
        assert_eq!(r.max_shifts, vec![2, 4]);
        assert_eq!(r.bound, ("4".to_string(), "1".to_string()));
        assert_eq!(r.multiplicity, 4);
        assert!(r.holds);
        let p = multiplicity_upper_bound_check(&ideal(2, &[&[1], &[2]]), GF).unwrap();
        assert_eq!(p.max_shifts, vec![1, 2]);
        assert_eq!(p.bound, ("1".to_string(), "1".to_string()));
        assert!(p.holds);
        assert_eq!(bound_as_f64(&p), Some(1.0));
    }
}
