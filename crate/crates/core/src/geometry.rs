//! Fat points at coordinate vertices of multiprojective space, and
//! Stanley-Reisner ideals of simplicial complexes.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{self, CwlReport};
use crate::ring::{veronese_ideal, Monomial, MonomialIdeal, RingCtx, VeroneseComponent, VeroneseSpec};
use crate::scalar::FieldChoice;

/// Points `P_0, ..., P_s` with multiplicities, where `P_j` has its `j`-th
/// coordinate equal to one in every factor `P^{n_i}` and all others zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointScheme {
    ring: Arc<RingCtx>,
    mults: Vec<u32>,
}

impl FatPointScheme {
    /// `dims` are the projective dimensions `n_1..n_r`; block `i` gets the
    /// variables `x{i}_0 .. x{i}_{n_i}`.
    pub fn new(dims: &[usize], mults: Vec<u32>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidSpec("projective dimensions must be positive".into()));
        }
        let mut names = Vec::new();
        for (i, &n) in dims.iter().enumerate() {
            names.extend((0..=n).map(|j| format!("x{}_{}", i + 1, j)));
        }
        let ring = RingCtx::new(names, dims.iter().map(|n| n + 1).collect())?;
        Self::in_ring(ring, mults)
    }

    /// Uses an existing ring whose block sizes are `n_i + 1`.
    pub fn in_ring(ring: Arc<RingCtx>, mults: Vec<u32>) -> Result<Self> {
        if ring.blocks().iter().any(|&b| b < 2) {
            return Err(Error::InvalidSpec("every block needs at least two coordinates".into()));
        }
        if mults.is_empty() || mults.contains(&0) {
            return Err(Error::InvalidSpec("multiplicities must be positive".into()));
        }
        let max_points = ring.blocks().iter().min().copied().expect("nonempty");
        if mults.len() > max_points {
            return Err(Error::InvalidSpec(format!(
                "{} points do not fit at coordinate vertices; at most {max_points} allowed",
                mults.len()
            )));
        }
        Ok(FatPointScheme { ring, mults })
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    /// Projective dimensions `n_i`.
    pub fn dims(&self) -> Vec<usize> {
        self.ring.blocks().iter().map(|b| b - 1).collect()
    }

    /// The Veronese description: point `j` contributes the ideal of all
    /// variables except the `j`-th of each block, raised to `a_j`.
    pub fn veronese_spec(&self) -> VeroneseSpec {
        let mut starts = Vec::with_capacity(self.ring.nblocks());
        let mut at = 0;
        for &b in self.ring.blocks() {
            starts.push(at);
            at += b;
        }
        let n = self.ring.nvars();
        let components = self
            .mults
            .iter()
            .enumerate()
            .map(|(j, &a)| VeroneseComponent {
                support: (0..n).filter(|v| !starts.iter().any(|s| s + j == *v)).collect(),
                power: a,
            })
            .collect();
        VeroneseSpec::new(self.ring.clone(), components).expect("valid by construction")
    }
}

pub fn fat_points_ideal(scheme: &FatPointScheme) -> MonomialIdeal {
    veronese_ideal(&scheme.veronese_spec())
}

/// Four simple points `[1:0],[0:1] x [1:0],[0:1]` in `P^1 x P^1`, whose
/// ideal is the complete intersection `(x0 x1, y0 y1)`.
pub fn non_general_fixture() -> MonomialIdeal {
    let ring = RingCtx::new(
        ["x0", "x1", "y0", "y1"].iter().map(|s| s.to_string()).collect(),
        vec![2, 2],
    )
    .expect("valid ring");
    MonomialIdeal::new(
        ring,
        vec![Monomial::from_vars(4, &[0, 1]), Monomial::from_vars(4, &[2, 3])],
    )
    .expect("arity matches")
}

/// A simplicial complex on `n` vertices given by its minimal nonfaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplexSpec {
    n: usize,
    nonfaces: Vec<BTreeSet<usize>>,
}

impl SimplicialComplexSpec {
    /// Vertices are 0-based.
    pub fn new(n: usize, nonfaces: Vec<BTreeSet<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("a complex needs at least one vertex".into()));
        }
        for (k, f) in nonfaces.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::InvalidSpec(format!("nonface {} is empty", k + 1)));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidSpec(format!("nonface {} uses vertex {} of {n}", k + 1, v + 1)));
            }
        }
        for (x, f) in nonfaces.iter().enumerate() {
            for (y, g) in nonfaces.iter().enumerate() {
                if x != y && f.is_subset(g) {
                    return Err(Error::InvalidSpec(format!(
                        "nonfaces {} and {} are comparable",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        Ok(SimplicialComplexSpec { n, nonfaces })
    }

    pub fn from_one_based(n: usize, nonfaces: &[&[usize]]) -> Result<Self> {
        if nonfaces.iter().any(|f| f.contains(&0)) {
            return Err(Error::InvalidSpec("1-based vertices start at 1".into()));
        }
        Self::new(n, nonfaces.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect())
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn nonfaces(&self) -> &[BTreeSet<usize>] {
        &self.nonfaces
    }
}

pub fn stanley_reisner_ideal(spec: &SimplicialComplexSpec) -> MonomialIdeal {
    let n = spec.n;
    let gens = spec
        .nonfaces
        .iter()
        .map(|f| Monomial::from_vars(n, &f.iter().copied().collect::<Vec<_>>()))
        .collect();
    MonomialIdeal::new(RingCtx::standard(n), gens).expect("arity matches")
}

/// Sequential Cohen-Macaulayness, decided as componentwise linearity of
/// the Alexander dual of the Stanley-Reisner ideal.
pub fn is_sequentially_cm(spec: &SimplicialComplexSpec, field: FieldChoice) -> Result<CwlReport> {
    let dual = stanley_reisner_ideal(spec).alexander_dual()?;
    if dual.is_unit() {
        // the full simplex: R/I is a polynomial ring
        return Ok(CwlReport {
            componentwise_linear: true,
            regularity: 0,
            components: Vec::new(),
            failing_degree: None,
        });
    }
    oracle::is_componentwise_linear(&dual, field)
}
