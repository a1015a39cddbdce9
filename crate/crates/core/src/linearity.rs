//! Term orders, linear quotients and the polymatroidal exchange property,
//! together with explicit generator orders for intersections of two and
//! three Veronese ideals.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{minimalize, monomials_of_degree, Monomial, MonomialIdeal, RingCtx, VeroneseSpec};

/// Generator count up to which [`search_linear_quotients`] falls back to
/// trying every degree-respecting permutation.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderDirection {
    DescendingRevlex,
    AscendingRevlex,
    DescendingLex,
}

impl OrderDirection {
    pub const ALL: [OrderDirection; 3] = [
        OrderDirection::DescendingRevlex,
        OrderDirection::AscendingRevlex,
        OrderDirection::DescendingLex,
    ];
}

/// Term-order relation between `m1` and `m2` (`Greater` means `m1 > m2`).
///
/// Both revlex directions use the same relation and need equal degrees;
/// the direction only matters when sorting.
pub fn compare(m1: &Monomial, m2: &Monomial, dir: OrderDirection) -> Result<Ordering> {
    match dir {
        OrderDirection::DescendingRevlex | OrderDirection::AscendingRevlex => {
            let (d1, d2) = (m1.total_degree(), m2.total_degree());
            if d1 != d2 {
                return Err(Error::DegreeMismatch(d1, d2));
            }
            Ok(m1.revlex_cmp(m2))
        }
        OrderDirection::DescendingLex => Ok(m1.lex_cmp(m2)),
    }
}

/// Sorts by total degree ascending, then by `dir` within each degree.
pub fn sort_generators(gens: &mut [Monomial], dir: OrderDirection) {
    gens.sort_by(|a, b| {
        a.total_degree().cmp(&b.total_degree()).then_with(|| match dir {
            OrderDirection::DescendingRevlex => b.revlex_cmp(a),
            OrderDirection::AscendingRevlex => a.revlex_cmp(b),
            OrderDirection::DescendingLex => b.lex_cmp(a),
        })
    });
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientCertificate {
    pub ordered_gens: Vec<Monomial>,
    /// Entry `k` holds the minimal generators of `(u_1..u_{k+1}) : u_{k+2}`.
    pub colon_gens_per_step: Vec<Vec<Monomial>>,
    pub verdict: bool,
    /// 1-based position of the first generator whose colon is not linear.
    pub failing_index: Option<usize>,
}

/// Checks linear quotients for the given generator order.
pub fn linear_quotients_in_order(gens: &[Monomial]) -> Result<QuotientCertificate> {
    if let Some(p) = gens.windows(2).position(|w| w[0].total_degree() > w[1].total_degree()) {
        return Err(Error::InvalidOrder { position: p + 2 });
    }
    let mut steps = Vec::with_capacity(gens.len().saturating_sub(1));
    let mut failing = None;
    for i in 1..gens.len() {
        let colon = minimalize(gens[..i].iter().map(|u| u.quotient_by_gcd(&gens[i])).collect());
        if failing.is_none() && colon.iter().any(|c| c.total_degree() != 1) {
            failing = Some(i + 1);
        }
        steps.push(colon);
    }
    Ok(QuotientCertificate {
        ordered_gens: gens.to_vec(),
        colon_gens_per_step: steps,
        verdict: failing.is_none(),
        failing_index: failing,
    })
}

/// Cheaper verdict-only variant that stops at the first failure.
fn passes_in_order(gens: &[Monomial]) -> bool {
    (1..gens.len()).all(|i| {
        // a colon is linear iff every quotient is divisible by some
        // degree-one quotient
        let q: Vec<Monomial> = gens[..i].iter().map(|u| u.quotient_by_gcd(&gens[i])).collect();
        let linear: Vec<&Monomial> = q.iter().filter(|m| m.total_degree() == 1).collect();
        q.iter().all(|m| linear.iter().any(|l| l.divides(m)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum QuotientSearch {
    Found { certificate: QuotientCertificate },
    /// Every degree-respecting order was tried.
    Exhausted,
    /// The standard orders failed and there are too many generators to try
    /// them all.
    Undetermined,
}

impl QuotientSearch {
    pub fn certificate(&self) -> Option<&QuotientCertificate> {
        match self {
            QuotientSearch::Found { certificate } => Some(certificate),
            _ => None,
        }
    }
}

pub fn search_linear_quotients(ideal: &MonomialIdeal) -> Result<QuotientSearch> {
    search_linear_quotients_with_cap(ideal, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn search_linear_quotients_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<QuotientSearch> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    for dir in OrderDirection::ALL {
        let mut gens = ideal.gens().to_vec();
        sort_generators(&mut gens, dir);
        if passes_in_order(&gens) {
            return Ok(QuotientSearch::Found {
                certificate: linear_quotients_in_order(&gens)?,
            });
        }
    }
    if ideal.ngens() > cap {
        return Ok(QuotientSearch::Undetermined);
    }
    let mut groups: Vec<Vec<Monomial>> = Vec::new();
    for g in ideal.gens() {
        match groups.last_mut() {
            Some(last) if last[0].total_degree() == g.total_degree() => last.push(g.clone()),
            _ => groups.push(vec![g.clone()]),
        }
    }
    let mut order = Vec::with_capacity(ideal.ngens());
    if let Some(found) = permute_groups(&groups, 0, &mut order) {
        return Ok(QuotientSearch::Found {
            certificate: linear_quotients_in_order(&found)?,
        });
    }
    Ok(QuotientSearch::Exhausted)
}

fn permute_groups(groups: &[Vec<Monomial>], g: usize, prefix: &mut Vec<Monomial>) -> Option<Vec<Monomial>> {
    if g == groups.len() {
        return passes_in_order(prefix).then(|| prefix.clone());
    }
    let mut items = groups[g].clone();
    permute_within(&mut items, 0, groups, g, prefix)
}

// Heap-free recursive permutation of one degree group, recursing into the
// next group once the current one is placed.
fn permute_within(
    items: &mut Vec<Monomial>,
    k: usize,
    groups: &[Vec<Monomial>],
    g: usize,
    prefix: &mut Vec<Monomial>,
) -> Option<Vec<Monomial>> {
    if k == items.len() {
        let base = prefix.len();
        prefix.extend(items.iter().cloned());
        // prune: the prefix alone must already have linear quotients
        let res = if passes_in_order(prefix) {
            permute_groups(groups, g + 1, prefix)
        } else {
            None
        };
        prefix.truncate(base);
        return res;
    }
    for s in k..items.len() {
        items.swap(k, s);
        if let Some(r) = permute_within(items, k + 1, groups, g, prefix) {
            return Some(r);
        }
        items.swap(k, s);
    }
    None
}

/// Outcome of one exchange test: `u`, `v` and a variable `i` with
/// `u_i > v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeWitness {
    pub u: Monomial,
    pub v: Monomial,
    pub i: usize,
    pub verdict: bool,
    /// Every `j` with `u_j < v_j` tried, with `x_j u / x_i` and whether it
    /// lies in the ideal.
    pub tried: Vec<(usize, Monomial, bool)>,
}

/// Tests the exchange condition for one triple. Stops at the first `j`
/// that works.
pub fn exchange_check(ideal: &MonomialIdeal, u: &Monomial, v: &Monomial, i: usize) -> Result<ExchangeWitness> {
    if u.exp(i) <= v.exp(i) {
        return Err(Error::Precondition(format!("exponent of variable {} must be larger in u", i + 1)));
    }
    let base = u.div_var(i).expect("u_i > 0");
    let mut tried = Vec::new();
    let mut verdict = false;
    for j in 0..u.nvars() {
        if u.exp(j) >= v.exp(j) {
            continue;
        }
        let w = base.times_var(j);
        let member = ideal.contains(&w);
        tried.push((j, w, member));
        if member {
            verdict = true;
            break;
        }
    }
    Ok(ExchangeWitness {
        u: u.clone(),
        v: v.clone(),
        i,
        verdict,
        tried,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolymatroidalVerdict {
    pub polymatroidal: bool,
    pub reason: Option<String>,
    /// First failing triple in canonical pair order.
    pub witness: Option<ExchangeWitness>,
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> PolymatroidalVerdict {
    if ideal.is_zero() {
        return PolymatroidalVerdict {
            polymatroidal: false,
            reason: Some("zero ideal".into()),
            witness: None,
        };
    }
    if !ideal.is_equigenerated() {
        return PolymatroidalVerdict {
            polymatroidal: false,
            reason: Some("generators have different degrees".into()),
            witness: None,
        };
    }
    let gens = ideal.gens();
    let m = gens.len();
    let n = ideal.ring().nvars();
    let witness = (0..m * m).into_par_iter().find_map_first(|k| {
        let (a, b) = (k / m, k % m);
        if a == b {
            return None;
        }
        let (u, v) = (&gens[a], &gens[b]);
        (0..n).filter(|&i| u.exp(i) > v.exp(i)).find_map(|i| {
            let w = exchange_check(ideal, u, v, i).expect("u_i > v_i");
            (!w.verdict).then_some(w)
        })
    });
    PolymatroidalVerdict {
        polymatroidal: witness.is_none(),
        reason: witness.as_ref().map(|_| "exchange property fails".to_string()),
        witness,
    }
}

/// Ascending revlex where `view` lists the variables from first to last.
fn sort_ascending_in_view(ms: &mut [Monomial], view: &[usize]) {
    ms.sort_by(|a, b| a.revlex_cmp_in(b, view.iter().rev().copied()));
}

fn alpha_of(ring: &std::sync::Arc<RingCtx>, comps: &[(&BTreeSet<usize>, u32)]) -> u32 {
    let spec = VeroneseSpec::new(
        ring.clone(),
        comps
            .iter()
            .map(|(s, a)| crate::ring::VeroneseComponent {
                support: (*s).clone(),
                power: *a,
            })
            .collect(),
    )
    .expect("validated supports");
    crate::ring::veronese_ideal(&spec).min_gen_degree().expect("nonzero")
}

/// Degree-`target` generators of `m_J^a ∩ m_K^b` stratified by their
/// degree in `h_view`, each stratum in ascending revlex over the variable
/// view `jk_view ++ h_view`.
#[allow(clippy::too_many_arguments)]
fn two_set_strata(
    n: usize,
    jk_view: &[usize],
    h_view: &[usize],
    j: &BTreeSet<usize>,
    k: &BTreeSet<usize>,
    a: u32,
    b: u32,
    target: u32,
) -> Vec<Monomial> {
    let view: Vec<usize> = jk_view.iter().chain(h_view).copied().collect();
    let mut out = Vec::new();
    for s in 0..=target {
        let lower: Vec<Monomial> = monomials_of_degree(n, jk_view, target - s)
            .into_iter()
            .filter(|m| m.degree_in(j) >= a && m.degree_in(k) >= b)
            .collect();
        if lower.is_empty() {
            continue;
        }
        let upper = monomials_of_degree(n, h_view, s);
        let mut stratum: Vec<Monomial> = lower.iter().flat_map(|l| upper.iter().map(move |h| l.mul(h))).collect();
        sort_ascending_in_view(&mut stratum, &view);
        out.extend(stratum);
    }
    out
}

fn check_sets(ring: &RingCtx, sets: &[&BTreeSet<usize>], powers: &[u32]) -> Result<()> {
    for s in sets {
        if s.is_empty() {
            return Err(Error::InvalidSpec("empty support".into()));
        }
        if s.iter().any(|&v| v >= ring.nvars()) {
            return Err(Error::InvalidSpec("support uses a variable outside the ring".into()));
        }
    }
    if powers.contains(&0) {
        return Err(Error::InvalidSpec("powers must be positive".into()));
    }
    Ok(())
}

/// Generators of `((m_J^a ∩ m_K^b)_{α+d})` in the order used to prove
/// linear quotients: the variables of `J ∪ K` come first, the remaining
/// ones last, and generators are grouped by their degree in the remaining
/// variables.
///
/// Supports are 0-based.
pub fn stratified_order_two_veronese(
    ring: &std::sync::Arc<RingCtx>,
    j: &BTreeSet<usize>,
    k: &BTreeSet<usize>,
    a: u32,
    b: u32,
    d: u32,
) -> Result<Vec<Monomial>> {
    check_sets(ring, &[j, k], &[a, b])?;
    let alpha = alpha_of(ring, &[(j, a), (k, b)]);
    let jk: Vec<usize> = j.union(k).copied().collect();
    let h: Vec<usize> = (0..ring.nvars()).filter(|v| !j.contains(v) && !k.contains(v)).collect();
    Ok(two_set_strata(ring.nvars(), &jk, &h, j, k, a, b, alpha + d))
}

/// Generators of `((m_J^a ∩ m_K^b ∩ m_L^c)_{α+d})`, `α` being the least
/// generator degree of the triple intersection, in a linear-quotient
/// order.
///
/// Equal supports are merged first. Variables outside `J ∪ K ∪ L` are
/// handled by stratifying on their degree. Otherwise a pair whose union
/// misses some variable is taken as `(J, K)`; the two-set order for the
/// view `(J ∪ K) \ L`, `L ∩ (J ∪ K)`, `L \ (J ∪ K)` is then filtered down to
/// the generators of the triple intersection. If every pair covers all
/// variables the ideal is polymatroidal and ascending revlex is used.
#[allow(clippy::too_many_arguments)]
pub fn stratified_order_three_veronese(
    ring: &std::sync::Arc<RingCtx>,
    j: &BTreeSet<usize>,
    k: &BTreeSet<usize>,
    l: &BTreeSet<usize>,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
) -> Result<Vec<Monomial>> {
    check_sets(ring, &[j, k, l], &[a, b, c])?;
    let mut comps: Vec<(BTreeSet<usize>, u32)> = Vec::new();
    for (s, p) in [(j, a), (k, b), (l, c)] {
        match comps.iter_mut().find(|(t, _)| t == s) {
            Some(e) => e.1 = e.1.max(p),
            None => comps.push((s.clone(), p)),
        }
    }
    let refs: Vec<(&BTreeSet<usize>, u32)> = comps.iter().map(|(s, p)| (s, *p)).collect();
    let alpha = alpha_of(ring, &refs);
    let target = alpha + d;
    let n = ring.nvars();
    let u: BTreeSet<usize> = comps.iter().flat_map(|(s, _)| s.iter().copied()).collect();
    let w: Vec<usize> = (0..n).filter(|v| !u.contains(v)).collect();
    let u_vars: Vec<usize> = u.iter().copied().collect();

    // Order of the degree-`deg` generators whose support lies in U.
    let inner = |deg: u32| -> Vec<Monomial> {
        match comps.len() {
            1 => {
                let (s, p) = &comps[0];
                two_set_strata(n, &u_vars, &[], s, s, *p, *p, deg)
            }
            2 => {
                let ((s, p), (t, q)) = (&comps[0], &comps[1]);
                two_set_strata(n, &u_vars, &[], s, t, *p, *q, deg)
            }
            _ => {
                let pair = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
                    .into_iter()
                    .find(|&(x, y, _)| comps[x].0.union(&comps[y].0).count() < u.len());
                let Some((x, y, z)) = pair else {
                    let mut all: Vec<Monomial> = monomials_of_degree(n, &u_vars, deg)
                        .into_iter()
                        .filter(|m| comps.iter().all(|(s, p)| m.degree_in(s) >= *p))
                        .collect();
                    sort_ascending_in_view(&mut all, &u_vars);
                    return all;
                };
                let (jj, aa) = (&comps[x].0, comps[x].1);
                let (kk, bb) = (&comps[y].0, comps[y].1);
                let (ll, cc) = (&comps[z].0, comps[z].1);
                let jk: BTreeSet<usize> = jj.union(kk).copied().collect();
                let mut jk_view: Vec<usize> = jk.iter().copied().filter(|v| !ll.contains(v)).collect();
                jk_view.extend(jk.iter().copied().filter(|v| ll.contains(v)));
                let h2: Vec<usize> = ll.iter().copied().filter(|v| !jk.contains(v)).collect();
                two_set_strata(n, &jk_view, &h2, jj, kk, aa, bb, deg)
                    .into_iter()
                    .filter(|m| m.degree_in(ll) >= cc)
                    .collect()
            }
        }
    };

    if w.is_empty() {
        return Ok(inner(target));
    }
    // Stratify by the degree in the unused variables W: for a fixed
    // U-part the W-parts come in ascending revlex, and each stratum sees
    // every variable of U in its colons through the previous stratum.
    let mut out = Vec::new();
    for v in 0..=target - alpha {
        let lower = inner(target - v);
        let mut upper = monomials_of_degree(n, &w, v);
        sort_ascending_in_view(&mut upper, &w);
        for h in &upper {
            out.extend(lower.iter().map(|m| m.mul(h)));
        }
    }
    Ok(out)
}
