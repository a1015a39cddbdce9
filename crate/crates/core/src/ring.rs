//! Monomials and monomial ideals over a fixed polynomial ring.
//!
//! Variables are addressed by 0-based index in declaration order. Every
//! [`MonomialIdeal`] keeps its minimal generators sorted canonically (total
//! degree ascending, then descending reverse-lex), so two ideals are equal
//! exactly when their generator lists are.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Variable names partitioned into consecutive blocks (the `N^r` grading).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingCtx {
    names: Vec<String>,
    blocks: Vec<usize>,
}

impl RingCtx {
    pub fn new(names: Vec<String>, blocks: Vec<usize>) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidRing("block sizes must be positive".into()));
        }
        if blocks.iter().sum::<usize>() != names.len() {
            return Err(Error::InvalidRing(format!(
                "block sizes {:?} do not sum to {} variables",
                blocks,
                names.len()
            )));
        }
        let unique: HashSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(Error::InvalidRing("variable names must be distinct".into()));
        }
        if names.iter().any(|s| s.is_empty()) {
            return Err(Error::InvalidRing("variable names must be nonempty".into()));
        }
        Ok(Arc::new(RingCtx { names, blocks }))
    }

    /// `k[x1, ..., xn]` with a single block.
    pub fn standard(n: usize) -> Arc<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), vec![n]).expect("valid standard ring")
    }

    /// Variables `x1..xN` split into the given blocks.
    pub fn with_blocks(blocks: &[usize]) -> Result<Arc<Self>> {
        let n = blocks.iter().sum();
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), blocks.to_vec())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn nblocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each variable.
    pub fn block_map(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(b, &size)| std::iter::repeat_n(b, size))
            .collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Same ring with `extra` fresh variables appended as a new block.
    pub fn extended(&self, extra: usize) -> Arc<Self> {
        if extra == 0 {
            return Arc::new(self.clone());
        }
        let mut names = self.names.clone();
        let mut fresh = 1;
        while names.len() < self.names.len() + extra {
            let candidate = format!("t{fresh}");
            fresh += 1;
            if !names.contains(&candidate) {
                names.push(candidate);
            }
        }
        let mut blocks = self.blocks.clone();
        blocks.push(extra);
        Arc::new(RingCtx { names, blocks })
    }
}

/// An exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Product of the listed variables (with multiplicity).
    pub fn from_vars(n: usize, vars: &[usize]) -> Self {
        let mut exps = vec![0; n];
        for &v in vars {
            exps[v] += 1;
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn block_degree(&self, ring: &RingCtx) -> Vec<u32> {
        let mut out = vec![0; ring.nblocks()];
        for (e, b) in self.exps.iter().zip(ring.block_map()) {
            out[b] += e;
        }
        out
    }

    /// Degree of the monomial restricted to the variables in `vars`.
    pub fn degree_in(&self, vars: &BTreeSet<usize>) -> u32 {
        vars.iter().map(|&i| self.exps[i]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// Divides by `x_i`; `None` when the exponent is zero.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    /// Term-order comparison in reverse-lex: `self > other` iff the last
    /// nonzero entry of `self - other` is negative.
    pub fn revlex_cmp(&self, other: &Monomial) -> Ordering {
        self.revlex_cmp_in(other, (0..self.exps.len()).rev())
    }

    /// Reverse-lex comparison where `last_to_first` lists the variables from
    /// the one considered last (inspected first) to the one considered first.
    pub fn revlex_cmp_in(&self, other: &Monomial, last_to_first: impl IntoIterator<Item = usize>) -> Ordering {
        for i in last_to_first {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Lexicographic term order with `x1 > x2 > ... > xn`.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    pub fn display<'a>(&'a self, ring: &'a RingCtx) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Canonical order: total degree ascending, then reverse-lex descending.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.revlex_cmp(other).reverse())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a RingCtx,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` supported on `vars`, in ascending
/// canonical order.
pub fn monomials_of_degree(n: usize, vars: &[usize], d: u32) -> Vec<Monomial> {
    fn rec(vars: &[usize], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.push(Monomial::new(cur.clone()));
                }
            }
            Some((&v, rest)) => {
                if rest.is_empty() {
                    cur[v] = left;
                    out.push(Monomial::new(cur.clone()));
                    cur[v] = 0;
                    return;
                }
                for e in (0..=left).rev() {
                    cur[v] = e;
                    rec(rest, left - e, cur, out);
                }
                cur[v] = 0;
            }
        }
    }
    let mut out = Vec::new();
    if vars.is_empty() {
        if d == 0 {
            out.push(Monomial::one(n));
        }
        return out;
    }
    let mut cur = vec![0; n];
    rec(vars, d, &mut cur, &mut out);
    out.sort();
    out
}

/// Sorts canonically, removes duplicates and non-minimal elements.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // candidates for dividing g have degree <= deg g and were seen already
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal with its canonical minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<RingCtx>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens` (any generating set; it is minimalized).
    pub fn new(ring: Arc<RingCtx>, gens: Vec<Monomial>) -> Result<Self> {
        let n = ring.nvars();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::ArityMismatch {
                expected: n,
                got: bad.nvars(),
            });
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimalize(gens),
        })
    }

    pub(crate) fn from_minimal_unchecked(ring: Arc<RingCtx>, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: Arc<RingCtx>) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<RingCtx>) -> Self {
        let n = ring.nvars();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    /// `m_J^a`: all degree-`a` monomials in the variables of `support`.
    pub fn power_of_variables(ring: Arc<RingCtx>, support: &BTreeSet<usize>, a: u32) -> Self {
        let vars: Vec<usize> = support.iter().copied().collect();
        let gens = monomials_of_degree(ring.nvars(), &vars, a);
        MonomialIdeal::from_minimal_unchecked(ring, gens)
    }

    /// The prime ideal generated by the given variables.
    pub fn variables(ring: Arc<RingCtx>, vars: &BTreeSet<usize>) -> Self {
        Self::power_of_variables(ring, vars, 1)
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Smallest generator degree, `None` for the zero ideal.
    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::total_degree)
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::total_degree)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.min_gen_degree() == self.max_gen_degree()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Membership by divisibility against the minimal generators.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn lcm_of_gens(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.ring.nvars()), |acc, g| acc.lcm(g))
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_arity(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.ring.nvars() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                got: m.nvars(),
            })
        }
    }

    /// `A ∩ B` via minimalized pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.push(u.lcm(v));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(lcms),
        })
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                prods.push(u.mul(v));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(prods),
        })
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::InvalidSpec("ideal powers must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `I : m`, generated by `u / gcd(u, m)` for `u` in `G(I)`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_arity(m)?;
        let gens = self.gens.iter().map(|u| u.quotient_by_gcd(m)).collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// `(I_d)`: the ideal generated by the degree-`d` monomials of `I`.
    pub fn degree_component(&self, d: u32) -> MonomialIdeal {
        let n = self.ring.nvars();
        let all: Vec<usize> = (0..n).collect();
        let mut seen: HashSet<Monomial> = HashSet::new();
        for g in self.gens.iter().filter(|g| g.total_degree() <= d) {
            for m in monomials_of_degree(n, &all, d - g.total_degree()) {
                seen.insert(g.mul(&m));
            }
        }
        MonomialIdeal::from_minimal_unchecked(self.ring.clone(), seen.into_iter().collect())
    }

    /// Alexander dual of a squarefree ideal: the intersection of the prime
    /// ideals spanned by the supports of the generators.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if let Some(bad) = self.gens.iter().find(|g| !g.is_squarefree()) {
            return Err(Error::SquarefreeRequired(bad.display(&self.ring).to_string()));
        }
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for g in &self.gens {
            let support: BTreeSet<usize> = g.support().into_iter().collect();
            acc = acc.intersect(&MonomialIdeal::variables(self.ring.clone(), &support))?;
        }
        Ok(acc)
    }

    /// Height of the ideal: the minimum size of a variable set meeting the
    /// support of every generator.
    pub fn support_codim(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.nvars();
        let supports: Vec<u64> = self
            .gens
            .iter()
            .map(|g| g.support().iter().fold(0u64, |acc, &i| acc | (1 << i)))
            .collect();
        for size in 1..=n {
            for cover in itertools::Itertools::combinations(0..n, size) {
                let mask = cover.iter().fold(0u64, |acc, &i| acc | (1 << i));
                if supports.iter().all(|s| s & mask != 0) {
                    return Ok(size);
                }
            }
        }
        Err(Error::Internal("no vertex cover found".into()))
    }

    /// The same generators viewed in a ring with `extra` appended variables.
    pub fn extend_ring(&self, extra: usize) -> MonomialIdeal {
        let ring = self.ring.extended(extra);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exps.clone();
                e.resize(e.len() + extra, 0);
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::from_minimal_unchecked(ring, gens)
    }

    /// Multiplies every generator by `m`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_arity(m)?;
        let gens = self.gens.iter().map(|g| g.mul(m)).collect();
        Ok(MonomialIdeal::from_minimal_unchecked(self.ring.clone(), gens))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        write!(f, ")")
    }
}

/// One Veronese factor `m_J^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VeroneseComponent {
    pub support: BTreeSet<usize>,
    pub power: u32,
}

/// `m_{J_1}^{a_1} ∩ ... ∩ m_{J_s}^{a_s}` over a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseSpec {
    ring: Arc<RingCtx>,
    components: Vec<VeroneseComponent>,
}

impl VeroneseSpec {
    /// Supports are 0-based variable indices.
    pub fn new(ring: Arc<RingCtx>, components: Vec<VeroneseComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidSpec("at least one component is required".into()));
        }
        for (k, c) in components.iter().enumerate() {
            if c.support.is_empty() {
                return Err(Error::InvalidSpec(format!("component {} has empty support", k + 1)));
            }
            if c.power == 0 {
                return Err(Error::InvalidSpec(format!("component {} has power 0", k + 1)));
            }
            if let Some(&bad) = c.support.iter().find(|&&i| i >= ring.nvars()) {
                return Err(Error::InvalidSpec(format!(
                    "component {} uses variable index {} outside the ring",
                    k + 1,
                    bad + 1
                )));
            }
        }
        Ok(VeroneseSpec { ring, components })
    }

    /// Convenience constructor with 1-based supports, as written in the
    /// literature: `&[(&[1, 2, 3], 1), ...]`.
    pub fn from_one_based(ring: Arc<RingCtx>, comps: &[(&[usize], u32)]) -> Result<Self> {
        let mut components = Vec::with_capacity(comps.len());
        for (support, power) in comps {
            if support.contains(&0) {
                return Err(Error::InvalidSpec("1-based indices start at 1".into()));
            }
            components.push(VeroneseComponent {
                support: support.iter().map(|i| i - 1).collect(),
                power: *power,
            });
        }
        Self::new(ring, components)
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn components(&self) -> &[VeroneseComponent] {
        &self.components
    }

    /// Membership criterion: `deg_{J_i}(m) >= a_i` for every component.
    pub fn satisfied_by(&self, m: &Monomial) -> bool {
        self.components.iter().all(|c| m.degree_in(&c.support) >= c.power)
    }

    /// True when every pair of supports covers all variables.
    pub fn pairwise_covering(&self) -> bool {
        let n = self.ring.nvars();
        let comps = &self.components;
        (0..comps.len()).all(|i| {
            (i + 1..comps.len()).all(|j| comps[i].support.union(&comps[j].support).count() == n)
        })
    }
}

/// The intersection of the Veronese ideals listed in `spec`.
pub fn veronese_ideal(spec: &VeroneseSpec) -> MonomialIdeal {
    let ring = spec.ring.clone();
    let mut acc: Option<MonomialIdeal> = None;
    for c in &spec.components {
        let factor = MonomialIdeal::power_of_variables(ring.clone(), &c.support, c.power);
        acc = Some(match acc {
            None => factor,
            Some(a) => a.intersect(&factor).expect("same ring"),
        });
    }
    acc.expect("nonempty spec")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Arc<RingCtx> {
        RingCtx::standard(n)
    }

    fn mono(n: usize, vars: &[usize]) -> Monomial {
        Monomial::from_vars(n, &vars.iter().map(|v| v - 1).collect::<Vec<_>>())
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(ring(n), gens.iter().map(|g| mono(n, g)).collect()).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().map(|i| i - 1).collect()
    }

    #[test]
    fn ring_validation() {
        assert!(RingCtx::new(vec![], vec![]).is_err());
        assert!(RingCtx::new(vec!["x".into(), "x".into()], vec![2]).is_err());
        assert!(RingCtx::new(vec!["x".into(), "y".into()], vec![1]).is_err());
        assert!(RingCtx::new(vec!["x".into(), "y".into()], vec![2, 0]).is_err());
        let r = RingCtx::with_blocks(&[2, 3]).unwrap();
        assert_eq!(r.nvars(), 5);
        assert_eq!(r.block_map(), vec![0, 0, 1, 1, 1]);
        let m = Monomial::new(vec![1, 0, 2, 0, 1]);
        assert_eq!(m.block_degree(&r), vec![1, 3]);
        assert_eq!(m.total_degree(), 4);
    }

    #[test]
    fn canonical_order_is_degree_then_descending_revlex() {
        let mut v = vec![mono(3, &[3, 3]), mono(3, &[1]), mono(3, &[1, 2]), mono(3, &[1, 1])];
        v.sort();
        assert_eq!(v, vec![mono(3, &[1]), mono(3, &[1, 1]), mono(3, &[1, 2]), mono(3, &[3, 3])]);
    }

    #[test]
    fn enumerate_monomials() {
        let all = monomials_of_degree(3, &[0, 1, 2], 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(monomials_of_degree(3, &[], 0), vec![Monomial::one(3)]);
        assert!(monomials_of_degree(3, &[], 1).is_empty());
        assert_eq!(monomials_of_degree(4, &[1, 3], 3).len(), 4);
    }

    #[test]
    fn example_with_seven_squarefree_generators() {
        let spec = VeroneseSpec::from_one_based(ring(5), &[(&[1, 2, 3], 1), (&[1, 4, 5], 1), (&[2, 3, 5], 1)]).unwrap();
        let got = veronese_ideal(&spec);
        let want = ideal(5, &[&[1, 2], &[1, 3], &[1, 5], &[2, 4], &[2, 5], &[3, 4], &[3, 5]]);
        assert_eq!(got, want);
    }

    #[test]
    fn tetrahedral_curve_ideal() {
        let spec =
            VeroneseSpec::from_one_based(ring(4), &[(&[1, 2], 1), (&[2, 3], 1), (&[3, 4], 1), (&[1, 4], 1)]).unwrap();
        assert_eq!(veronese_ideal(&spec), ideal(4, &[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn single_veronese_is_all_monomials_of_that_degree() {
        let spec = VeroneseSpec::from_one_based(ring(4), &[(&[2, 4], 3)]).unwrap();
        let i = veronese_ideal(&spec);
        assert_eq!(i.ngens(), 4);
        assert!(i.gens().iter().all(|g| g.total_degree() == 3 && g.exp(0) == 0 && g.exp(2) == 0));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(VeroneseSpec::from_one_based(ring(3), &[(&[], 1)]).is_err());
        assert!(VeroneseSpec::from_one_based(ring(3), &[(&[1], 0)]).is_err());
        assert!(VeroneseSpec::from_one_based(ring(3), &[(&[4], 1)]).is_err());
        assert!(VeroneseSpec::from_one_based(ring(3), &[]).is_err());
    }

    #[test]
    fn intersect_basics() {
        let a = ideal(2, &[&[1]]);
        let b = ideal(2, &[&[2]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 2]]));
        let m = ideal(2, &[&[1], &[2]]);
        assert_eq!(m.intersect(&m).unwrap(), m);
        assert_eq!(a.intersect(&MonomialIdeal::zero(ring(2))).unwrap(), MonomialIdeal::zero(ring(2)));
        assert_eq!(a.intersect(&MonomialIdeal::unit(ring(2))).unwrap(), a);
        assert_eq!(a.intersect(&ideal(3, &[&[1]])), Err(Error::RingMismatch));
    }

    #[test]
    fn intersect_matches_membership_by_degree() {
        let r = ring(3);
        let spec = VeroneseSpec::from_one_based(r.clone(), &[(&[1, 2], 2), (&[2, 3], 1)]).unwrap();
        let m12 = MonomialIdeal::power_of_variables(r.clone(), &set(&[1, 2]), 2);
        let m23 = MonomialIdeal::power_of_variables(r.clone(), &set(&[2, 3]), 1);
        let inter = m12.intersect(&m23).unwrap();
        assert_eq!(inter, veronese_ideal(&spec));
        for d in 0..=3 {
            for m in monomials_of_degree(3, &[0, 1, 2], d) {
                assert_eq!(inter.contains(&m), spec.satisfied_by(&m), "{m:?}");
            }
        }
    }

    #[test]
    fn products_and_powers() {
        let a = ideal(3, &[&[1]]);
        let b = ideal(3, &[&[2], &[3]]);
        assert_eq!(a.multiply(&b).unwrap(), ideal(3, &[&[1, 2], &[1, 3]]));
        let m = ideal(2, &[&[1], &[2]]);
        assert_eq!(m.power(2).unwrap(), ideal(2, &[&[1, 1], &[1, 2], &[2, 2]]));
        assert!(m.power(0).is_err());
        // m_B * m_A^2 * m_C with A={1}, B={2}, C={3}
        let r = ring(3);
        let ma = MonomialIdeal::variables(r.clone(), &set(&[1]));
        let mb = MonomialIdeal::variables(r.clone(), &set(&[2]));
        let mc = MonomialIdeal::variables(r.clone(), &set(&[3]));
        let p = mb.multiply(&ma.power(2).unwrap()).unwrap().multiply(&mc).unwrap();
        assert_eq!(p, ideal(3, &[&[1, 1, 2, 3]]));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(4, &[&[1, 3]]);
        assert_eq!(i.colon_by_monomial(&mono(4, &[2, 4])).unwrap(), i);
        let j = ideal(2, &[&[1, 1, 2]]);
        assert_eq!(j.colon_by_monomial(&mono(2, &[1])).unwrap(), ideal(2, &[&[1, 2]]));
        let k = ideal(3, &[&[1, 2], &[1, 3]]);
        assert!(k.colon_by_monomial(&mono(3, &[1, 2])).unwrap().is_unit());
    }

    #[test]
    fn degree_components() {
        let i = ideal(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(i.degree_component(2), i);
        assert!(i.degree_component(1).is_zero());
        let sq = ideal(2, &[&[1], &[2]]).power(2).unwrap();
        assert_eq!(sq.degree_component(3), ideal(2, &[&[1, 1, 1], &[1, 1, 2], &[1, 2, 2], &[2, 2, 2]]));
        let mixed = ideal(2, &[&[1], &[2, 2]]);
        assert_eq!(mixed.degree_component(2), ideal(2, &[&[1, 1], &[1, 2], &[2, 2]]));
        assert_eq!(mixed.degree_component(1), ideal(2, &[&[1]]));
    }

    #[test]
    fn alexander_dual_examples() {
        let i = ideal(6, &[&[1, 4, 5], &[1, 2, 6], &[1, 3, 5]]);
        let expected = MonomialIdeal::variables(ring(6), &set(&[1, 4, 5]))
            .intersect(&MonomialIdeal::variables(ring(6), &set(&[1, 2, 6])))
            .unwrap()
            .intersect(&MonomialIdeal::variables(ring(6), &set(&[1, 3, 5])))
            .unwrap();
        assert_eq!(i.alexander_dual().unwrap(), expected);
        assert_eq!(ideal(2, &[&[1, 2]]).alexander_dual().unwrap(), ideal(2, &[&[1], &[2]]));
        assert!(matches!(
            ideal(2, &[&[1, 1]]).alexander_dual(),
            Err(Error::SquarefreeRequired(_))
        ));
    }

    #[test]
    fn codimension() {
        assert_eq!(ideal(4, &[&[1, 3], &[2, 4]]).support_codim().unwrap(), 2);
        assert_eq!(ideal(2, &[&[1], &[2, 2]]).support_codim().unwrap(), 2);
        assert_eq!(ideal(6, &[&[1, 4, 5], &[1, 2, 6], &[1, 3, 5]]).support_codim().unwrap(), 1);
        assert_eq!(MonomialIdeal::zero(ring(2)).support_codim(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn display_uses_ring_names() {
        let i = ideal(3, &[&[1, 1, 2], &[3]]);
        assert_eq!(i.to_string(), "(x3, x1^2*x2)");
        assert_eq!(MonomialIdeal::zero(ring(1)).to_string(), "(0)");
    }

    #[test]
    fn extend_ring_appends_variables() {
        let i = ideal(2, &[&[1, 2]]);
        let e = i.extend_ring(2);
        assert_eq!(e.ring().nvars(), 4);
        assert_eq!(e.gens()[0].exponents(), &[1, 1, 0, 0]);
    }
}
