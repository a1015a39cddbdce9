//! Closed-form graded Betti numbers for Veronese-type ideals, and the
//! splitting `I = U + V` of `m_J^a ∩ m_K^b` behind them.
//!
//! Binomials follow `C(n, 0) = 1` for every integer `n`, `C(n, k) = 0` for
//! `k < 0` or `0 <= n < k`, and `C(n, k) = 0` for `n < 0 < k`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, GradingKind};
use crate::error::{Error, Result};
use crate::oracle;
use crate::ring::{Monomial, MonomialIdeal, RingCtx};
use crate::scalar::FieldChoice;

/// Largest `|G(U ∩ V)|` for which every subset is enumerated.
pub const DEFAULT_SPLIT_CAP: usize = 24;

pub fn binomial(n: i64, k: i64) -> u128 {
    if k == 0 {
        return 1;
    }
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Accumulates `(i, j)` counts with overflow detection.
#[derive(Default)]
struct Acc(BTreeMap<(usize, u32), u128>);

impl Acc {
    fn add(&mut self, i: usize, j: u32, v: u128) -> Result<()> {
        if v == 0 {
            return Ok(());
        }
        let e = self.0.entry((i, j)).or_insert(0);
        *e = e.checked_add(v).ok_or_else(overflow)?;
        Ok(())
    }

    fn into_table(self) -> Result<BettiTable> {
        let mut entries = Vec::with_capacity(self.0.len());
        for ((i, j), v) in self.0 {
            entries.push((i, j, u64::try_from(v).map_err(|_| overflow())?));
        }
        Ok(BettiTable::from_total_entries(entries))
    }
}

fn overflow() -> Error {
    Error::Capacity {
        what: "Betti number magnitude",
        size: usize::MAX,
        cap: u64::MAX as usize,
    }
}

fn mul(xs: &[u128]) -> Result<u128> {
    xs.iter().try_fold(1u128, |acc, &x| acc.checked_mul(x).ok_or_else(overflow))
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

/// `β_{i,i+a}(m_J^a) = C(a+|J|-1, a+i) C(a+i-1, i)`.
fn power_column(size: u32, a: u32, i: usize) -> u128 {
    let (s, a, i) = (size as i64, a as i64, i as i64);
    binomial(a + s - 1, a + i) * binomial(a + i - 1, i)
}

pub fn betti_power_formula(j_size: u32, a: u32) -> Result<BettiTable> {
    require(j_size >= 1 && a >= 1, "support size and power must be positive")?;
    let mut acc = Acc::default();
    for i in 0..j_size as usize {
        acc.add(i, i as u32 + a, power_column(j_size, a, i))?;
    }
    acc.into_table()
}

/// Betti table of `m_{J_1}^{a_1} ··· m_{J_s}^{a_s}` for pairwise disjoint
/// supports: a convolution of the single-factor columns.
pub fn betti_disjoint_product_formula(sizes: &[u32], powers: &[u32]) -> Result<BettiTable> {
    require(!sizes.is_empty() && sizes.len() == powers.len(), "one power per support")?;
    require(sizes.iter().chain(powers).all(|&x| x >= 1), "sizes and powers must be positive")?;
    let mut conv: Vec<u128> = vec![1];
    for (&s, &a) in sizes.iter().zip(powers) {
        let col: Vec<u128> = (0..s as usize).map(|i| power_column(s, a, i)).collect();
        let mut next = vec![0u128; conv.len() + col.len() - 1];
        for (x, &p) in conv.iter().enumerate() {
            for (y, &q) in col.iter().enumerate() {
                next[x + y] = next[x + y].checked_add(mul(&[p, q])?).ok_or_else(overflow)?;
            }
        }
        conv = next;
    }
    let shift: u32 = powers.iter().sum();
    let mut acc = Acc::default();
    for (i, v) in conv.into_iter().enumerate() {
        acc.add(i, i as u32 + shift, v)?;
    }
    acc.into_table()
}

fn u_entry(a_size: i64, c_size: i64, a: i64, b: i64, i: i64) -> Result<u128> {
    let mut v = binomial(c_size + a - 1, a + i) * binomial(a + i - 1, i);
    for j in 1..=a - b {
        for k in 0..a_size {
            let t = mul(&[
                binomial(k + j - 1, j - 1),
                binomial(c_size + a - j - 1, a - j),
                binomial(c_size + k, i),
            ])?;
            v = v.checked_add(t).ok_or_else(overflow)?;
        }
    }
    Ok(v)
}

/// Betti table of `U = m_C^a + m_A m_C^{a-1} + ... + m_A^{a-b} m_C^b`.
pub fn betti_u_formula(a_size: u32, c_size: u32, a: u32, b: u32) -> Result<BettiTable> {
    require(a_size >= 1 && c_size >= 1, "|A| and |C| must be positive")?;
    require(a >= b && b >= 1, "powers must satisfy a >= b >= 1")?;
    let mut acc = Acc::default();
    for i in 0..=(a_size + c_size) as usize {
        let v = u_entry(a_size as i64, c_size as i64, a as i64, b as i64, i as i64)?;
        acc.add(i, i as u32 + a, v)?;
    }
    acc.into_table()
}

/// Row `a + 1` of `V` as the five-binomial convolution; sums over
/// `i_1 + i_2 + i_3 = i`.
fn v_first_row_entry(a_size: i64, b_size: i64, c_size: i64, a: i64, b: i64, i: i64) -> Result<u128> {
    let mut v: u128 = 0;
    for i1 in 0..=i {
        for i2 in 0..=i - i1 {
            let i3 = i - i1 - i2;
            let t = mul(&[
                binomial(b_size, 1 + i1),
                binomial(a_size + a - b, a - b + 1 + i2),
                binomial(a - b + i2, i2),
                binomial(c_size + b - 2, b - 1 + i3),
                binomial(b + i3 - 2, i3),
            ])?;
            v = v.checked_add(t).ok_or_else(overflow)?;
        }
    }
    Ok(v)
}

/// Row `a + j` of `V` for `2 <= j <= b`.
fn v_row_entry(a_size: i64, b_size: i64, c_size: i64, a: i64, b: i64, j: i64, i: i64) -> Result<u128> {
    let mut v: u128 = 0;
    for k1 in 0..a_size {
        for k2 in 0..b_size {
            let t = mul(&[
                binomial(c_size + b - j - 1, b - j),
                binomial(k1 + a - b + j - 1, a - b + j - 1),
                binomial(k2 + j - 1, j - 1),
                binomial(c_size + k1 + k2, i),
            ])?;
            v = v.checked_add(t).ok_or_else(overflow)?;
        }
    }
    Ok(v)
}

/// Betti table of `V = m_B m_A^{a-b+1} m_C^{b-1} + ... + m_B^b m_A^a`.
///
/// For `b = 1`, `V = m_B m_A^a` and its table comes from the disjoint
/// product formula.
pub fn betti_v_formula(a_size: u32, b_size: u32, c_size: u32, a: u32, b: u32) -> Result<BettiTable> {
    require(a_size >= 1 && b_size >= 1 && c_size >= 1, "|A|, |B| and |C| must be positive")?;
    require(a >= b && b >= 1, "powers must satisfy a >= b >= 1")?;
    if b == 1 {
        return betti_disjoint_product_formula(&[b_size, a_size], &[1, a]);
    }
    let (sa, sb, sc, a6, b6) = (a_size as i64, b_size as i64, c_size as i64, a as i64, b as i64);
    let top = (a_size + b_size + c_size) as usize;
    let mut acc = Acc::default();
    for i in 0..=top {
        acc.add(i, i as u32 + a + 1, v_first_row_entry(sa, sb, sc, a6, b6, i as i64)?)?;
        for j in 2..=b {
            acc.add(i, i as u32 + a + j, v_row_entry(sa, sb, sc, a6, b6, j as i64, i as i64)?)?;
        }
    }
    acc.into_table()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// `J ∩ K = ∅`
    Disjoint,
    /// `J ⊆ K`
    JInsideK,
    /// `K ⊆ J`
    KInsideJ,
    General,
}

/// The case split for `m_J^a ∩ m_K^b`, after swapping so that `a >= b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoVeroneseCase {
    pub tag: CaseTag,
    /// `J \ K`
    pub a_set: BTreeSet<usize>,
    /// `K \ J`
    pub b_set: BTreeSet<usize>,
    /// `J ∩ K`
    pub c_set: BTreeSet<usize>,
    pub a: u32,
    pub b: u32,
    /// Whether `(J, a)` and `(K, b)` were exchanged.
    pub swapped: bool,
}

pub fn classify_two_veronese(j: &BTreeSet<usize>, k: &BTreeSet<usize>, a: u32, b: u32) -> Result<TwoVeroneseCase> {
    require(!j.is_empty() && !k.is_empty(), "supports must be nonempty")?;
    require(a >= 1 && b >= 1, "powers must be positive")?;
    let swapped = a < b;
    let (j, k, a, b) = if swapped { (k, j, b, a) } else { (j, k, a, b) };
    let a_set: BTreeSet<usize> = j.difference(k).copied().collect();
    let b_set: BTreeSet<usize> = k.difference(j).copied().collect();
    let c_set: BTreeSet<usize> = j.intersection(k).copied().collect();
    let tag = if c_set.is_empty() {
        CaseTag::Disjoint
    } else if a_set.is_empty() {
        CaseTag::JInsideK
    } else if b_set.is_empty() {
        CaseTag::KInsideJ
    } else {
        CaseTag::General
    };
    Ok(TwoVeroneseCase {
        tag,
        a_set,
        b_set,
        c_set,
        a,
        b,
        swapped,
    })
}

/// Total Betti table of `m_J^a ∩ m_K^b` from the closed forms.
pub fn betti_two_veronese(j: &BTreeSet<usize>, k: &BTreeSet<usize>, a: u32, b: u32) -> Result<BettiTable> {
    let case = classify_two_veronese(j, k, a, b)?;
    let (sa, sb, sc) = (case.a_set.len() as u32, case.b_set.len() as u32, case.c_set.len() as u32);
    let (a, b) = (case.a, case.b);
    match case.tag {
        CaseTag::Disjoint => {
            let (sj, sk) = if case.swapped { (k.len(), j.len()) } else { (j.len(), k.len()) };
            betti_disjoint_product_formula(&[sj as u32, sk as u32], &[a, b])
        }
        CaseTag::JInsideK => betti_power_formula(sa + sc, a),
        CaseTag::KInsideJ => betti_u_formula(sa, sc, a, b),
        CaseTag::General => {
            let u = betti_u_formula(sa, sc, a, b)?;
            let v = betti_v_formula(sa, sb, sc, a, b)?;
            let uv = betti_disjoint_product_formula(&[sb, sa, sc], &[1, a - b + 1, b])?;
            u.plus(&v)?.plus(&uv.shift_homological())
        }
    }
}

/// Total Betti table of two fat points of multiplicities `a >= b` in
/// linear general position in `P^{n_1} x ... x P^{n_r}`.
pub fn betti_two_fat_points(blocks: &[u32], a: u32, b: u32) -> Result<BettiTable> {
    require(!blocks.is_empty() && blocks.iter().all(|&n| n >= 1), "block dimensions must be positive")?;
    require(a >= b && b >= 1, "multiplicities must satisfy a >= b >= 1")?;
    let r = blocks.len() as i64;
    let big_n: i64 = blocks.iter().map(|&n| n as i64).sum();
    let c = big_n - r;
    let (a6, b6) = (a as i64, b as i64);
    let top = (big_n + r) as usize;
    let mut acc = Acc::default();
    for i in 0..=top {
        let i6 = i as i64;
        acc.add(i, i as u32 + a, u_entry(r, c, a6, b6, i6)?)?;

        let mut second: u128 = 0;
        if i6 >= 1 {
            for i1 in 0..i6 {
                for i2 in 0..i6 - i1 {
                    let i3 = i6 - 1 - i1 - i2;
                    let t = mul(&[
                        binomial(r, 1 + i1),
                        binomial(r + a6 - b6, a6 - b6 + 1 + i2),
                        binomial(a6 - b6 + i2, i2),
                        binomial(c + b6 - 1, b6 + i3),
                        binomial(b6 + i3 - 1, i3),
                    ])?;
                    second = second.checked_add(t).ok_or_else(overflow)?;
                }
            }
        }
        let first = v_first_row_entry(r, r, c, a6, b6, i6)?;
        acc.add(i, i as u32 + a + 1, first.checked_add(second).ok_or_else(overflow)?)?;

        for j in 2..=b {
            acc.add(i, i as u32 + a + j, v_row_entry(r, r, c, a6, b6, j as i64, i6)?)?;
        }
    }
    acc.into_table()
}

/// `U`, `V` and the splitting map on `G(U ∩ V)`.
#[derive(Clone, Debug)]
pub struct SplitPair {
    pub u: MonomialIdeal,
    pub v: MonomialIdeal,
    pub intersection: MonomialIdeal,
    /// `(w, φ(w), ψ(w))` for each `w` in `G(U ∩ V)`.
    pub phi_psi: Vec<(Monomial, Monomial, Monomial)>,
}

/// Product of powers of pairwise disjoint variable sets.
fn block_product(ring: &Arc<RingCtx>, parts: &[(&BTreeSet<usize>, u32)]) -> MonomialIdeal {
    parts.iter().fold(MonomialIdeal::unit(ring.clone()), |acc, (s, p)| {
        acc.multiply(&MonomialIdeal::power_of_variables(ring.clone(), s, *p)).expect("same ring")
    })
}

fn sum_of(ring: &Arc<RingCtx>, parts: Vec<MonomialIdeal>) -> MonomialIdeal {
    parts
        .into_iter()
        .fold(MonomialIdeal::zero(ring.clone()), |acc, p| acc.add(&p).expect("same ring"))
}

fn max_var_in(m: &Monomial, set: &BTreeSet<usize>) -> usize {
    *set.iter().rev().find(|&&v| m.exp(v) > 0).expect("monomial has positive degree on the block")
}

/// Builds the splitting of `m_J^a ∩ m_K^b` when `J \ K`, `K \ J` and
/// `J ∩ K` are all nonempty.
pub fn build_uv_split(ring: &Arc<RingCtx>, j: &BTreeSet<usize>, k: &BTreeSet<usize>, a: u32, b: u32) -> Result<SplitPair> {
    let case = classify_two_veronese(j, k, a, b)?;
    if case.tag != CaseTag::General {
        return Err(Error::Precondition(
            "the splitting needs J \\ K, K \\ J and J ∩ K all nonempty".into(),
        ));
    }
    if j.iter().chain(k).any(|&v| v >= ring.nvars()) {
        return Err(Error::InvalidSpec("support uses a variable outside the ring".into()));
    }
    let (sa, sb, sc) = (&case.a_set, &case.b_set, &case.c_set);
    let (a, b) = (case.a, case.b);
    let u = sum_of(ring, (0..=a - b).map(|t| block_product(ring, &[(sa, t), (sc, a - t)])).collect());
    let v = sum_of(
        ring,
        (1..=b).map(|t| block_product(ring, &[(sb, t), (sa, a - b + t), (sc, b - t)])).collect(),
    );
    let intersection = u.intersect(&v)?;
    let expected = block_product(ring, &[(sb, 1), (sa, a - b + 1), (sc, b)]);
    if intersection != expected {
        return Err(Error::Internal("U ∩ V differs from m_B m_A^(a-b+1) m_C^b".into()));
    }
    let phi_psi = intersection
        .gens()
        .iter()
        .map(|w| {
            let phi = w
                .exponents()
                .iter()
                .enumerate()
                .map(|(i, &e)| if sb.contains(&i) { 0 } else { e })
                .collect::<Vec<_>>();
            let phi = Monomial::new(phi).div_var(max_var_in(w, sa)).expect("A-part is nonconstant");
            let psi = w.div_var(max_var_in(w, sc)).expect("C-part is nonconstant");
            (w.clone(), phi, psi)
        })
        .collect();
    Ok(SplitPair {
        u,
        v,
        intersection,
        phi_psi,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitMethod {
    /// Every nonempty subset of `G(U ∩ V)` was checked.
    ExhaustiveSubsets,
    /// Every element of the lcm lattice of `G(U ∩ V)` was checked, which
    /// decides the subset condition exactly.
    LcmLattice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitVerification {
    /// `G(I)` is the disjoint union of `G(U)` and `G(V)`.
    pub generators_partition: bool,
    /// `w = lcm(φ(w), ψ(w))` with `φ(w) ∈ G(U)`, `ψ(w) ∈ G(V)`.
    pub lcm_condition: bool,
    /// Strict divisibility for every subset; `None` when skipped because
    /// an earlier condition failed.
    pub subset_condition: Option<bool>,
    pub method: SplitMethod,
    pub holds: bool,
}

pub fn verify_splitting(ideal: &MonomialIdeal, pair: &SplitPair) -> SplitVerification {
    verify_splitting_with_cap(ideal, pair, DEFAULT_SPLIT_CAP)
}

pub fn verify_splitting_with_cap(ideal: &MonomialIdeal, pair: &SplitPair, cap: usize) -> SplitVerification {
    let gu: HashSet<&Monomial> = pair.u.gens().iter().collect();
    let gv: HashSet<&Monomial> = pair.v.gens().iter().collect();
    let gi: HashSet<&Monomial> = ideal.gens().iter().collect();
    let generators_partition = gu.is_disjoint(&gv)
        && gu.len() + gv.len() == gi.len()
        && gu.iter().chain(gv.iter()).all(|g| gi.contains(g));

    let covers_all = pair.phi_psi.len() == pair.intersection.ngens()
        && pair.intersection.gens().iter().zip(&pair.phi_psi).all(|(g, t)| *g == t.0);
    let lcm_condition = covers_all
        && pair
            .phi_psi
            .iter()
            .all(|(w, p, q)| gu.contains(p) && gv.contains(q) && p.lcm(q) == *w);

    let n = pair.phi_psi.len();
    let method = if n <= cap {
        SplitMethod::ExhaustiveSubsets
    } else {
        SplitMethod::LcmLattice
    };
    let subset_condition = if !lcm_condition {
        None
    } else if n <= cap {
        Some(subsets_strict(&pair.phi_psi))
    } else {
        Some(lattice_strict(pair))
    };
    SplitVerification {
        generators_partition,
        lcm_condition,
        subset_condition,
        method,
        holds: generators_partition && lcm_condition && subset_condition == Some(true),
    }
}

fn subsets_strict(maps: &[(Monomial, Monomial, Monomial)]) -> bool {
    let nv = match maps.first() {
        Some(t) => t.0.nvars(),
        None => return true,
    };
    // flat exponent rows: w, φ(w), ψ(w) side by side
    let rows: Vec<u32> = maps
        .iter()
        .flat_map(|(w, p, q)| w.exponents().iter().chain(p.exponents()).chain(q.exponents()).copied())
        .collect();
    let width = 3 * nv;
    // one scratch row of running lcms per depth
    let mut scratch = vec![0u32; width * (maps.len() + 1)];
    dfs_strict(&rows, width, nv, 0, 0, &mut scratch)
}

fn dfs_strict(rows: &[u32], width: usize, nv: usize, next: usize, depth: usize, scratch: &mut [u32]) -> bool {
    let count = rows.len() / width;
    for k in next..count {
        let (cur, rest) = scratch.split_at_mut((depth + 1) * width);
        let cur = &cur[depth * width..];
        let out = &mut rest[..width];
        let row = &rows[k * width..(k + 1) * width];
        for t in 0..width {
            out[t] = cur[t].max(row[t]);
        }
        let (l, lp, lq) = (&out[..nv], &out[nv..2 * nv], &out[2 * nv..]);
        // φ and ψ divide w, so divisibility holds; only equality can fail
        if lp == l || lq == l {
            return false;
        }
        if !dfs_strict(rows, width, nv, k + 1, depth + 1, scratch) {
            return false;
        }
    }
    true
}

/// With `φ(w) | w` and `ψ(w) | w` for every `w`, some subset fails iff for
/// some lattice element `μ` the set `T` of all generators dividing `μ` has
/// `lcm(φ(T)) = μ` or `lcm(ψ(T)) = μ`.
fn lattice_strict(pair: &SplitPair) -> bool {
    let lattice = oracle::lcm_lattice(&pair.intersection);
    let nv = pair.intersection.ring().nvars();
    lattice.iter().all(|mu| {
        let (mut lp, mut lq) = (Monomial::one(nv), Monomial::one(nv));
        for (w, p, q) in &pair.phi_psi {
            if w.divides(mu) {
                lp = lp.lcm(p);
                lq = lq.lcm(q);
            }
        }
        lp != *mu && lq != *mu
    })
}

/// Checks `β(I) = β(U) + β(V) + β_{i-1}(U ∩ V)` on total tables computed by
/// the oracle.
pub fn ekf_identity_check(ideal: &MonomialIdeal, pair: &SplitPair, field: FieldChoice) -> Result<bool> {
    if pair.u.is_zero() || pair.v.is_zero() {
        return Err(Error::Precondition("both parts of a splitting must be nonzero".into()));
    }
    let total = |i: &MonomialIdeal| oracle::betti(i, field)?.coarsen(GradingKind::Total);
    let lhs = total(ideal)?;
    let rhs = total(&pair.u)?
        .plus(&total(&pair.v)?)?
        .plus(&total(&pair.intersection)?.shift_homological())?;
    Ok(lhs == rhs)
}
