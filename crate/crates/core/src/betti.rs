//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which grading a table is expressed in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// `N^n` multidegrees; remembers the block structure for coarsening.
    Fine { blocks: Vec<usize> },
    /// `N^r` block degrees.
    Block { blocks: Vec<usize> },
    /// Standard `N` grading.
    Total,
}

/// Target of a coarsening request.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GradingKind {
    Fine,
    Block,
    Total,
}

impl Grading {
    pub fn kind(&self) -> GradingKind {
        match self {
            Grading::Fine { .. } => GradingKind::Fine,
            Grading::Block { .. } => GradingKind::Block,
            Grading::Total => GradingKind::Total,
        }
    }

    fn rank(kind: GradingKind) -> u8 {
        match kind {
            GradingKind::Fine => 2,
            GradingKind::Block => 1,
            GradingKind::Total => 0,
        }
    }
}

impl fmt::Display for GradingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GradingKind::Fine => "fine",
            GradingKind::Block => "block",
            GradingKind::Total => "total",
        })
    }
}

/// Nonzero graded Betti numbers `β_{i,deg}`.
///
/// Degrees are vectors: length `n` for fine tables, `r` for block tables
/// and 1 for total tables. Zero ranks are never stored.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    grading: Grading,
    entries: BTreeMap<(usize, Vec<u32>), u64>,
}

impl BettiTable {
    pub fn new(grading: Grading) -> Self {
        BettiTable {
            grading,
            entries: BTreeMap::new(),
        }
    }

    pub fn total() -> Self {
        Self::new(Grading::Total)
    }

    /// Total table from `(i, j, rank)` triples; zero ranks are dropped.
    pub fn from_total_entries(entries: impl IntoIterator<Item = (usize, u32, u64)>) -> Self {
        let mut t = Self::total();
        for (i, j, r) in entries {
            t.add(i, vec![j], r);
        }
        t
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    /// Adds `rank` to the entry at `(i, degree)`.
    pub fn add(&mut self, i: usize, degree: Vec<u32>, rank: u64) {
        if rank == 0 {
            return;
        }
        *self.entries.entry((i, degree)).or_insert(0) += rank;
    }

    pub fn get(&self, i: usize, degree: &[u32]) -> u64 {
        self.entries.get(&(i, degree.to_vec())).copied().unwrap_or(0)
    }

    /// `β_{i,j}` in the total grading, summing over finer degrees.
    pub fn total_entry(&self, i: usize, j: u32) -> u64 {
        self.entries
            .iter()
            .filter(|((k, d), _)| *k == i && d.iter().sum::<u32>() == j)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &[u32], u64)> {
        self.entries.iter().map(|((i, d), r)| (*i, d.as_slice(), *r))
    }

    /// `(i, total degree, rank)` triples, sorted.
    pub fn total_triples(&self) -> Vec<(usize, u32, u64)> {
        self.coarsen_unchecked_total()
            .entries
            .into_iter()
            .map(|((i, d), r)| (i, d[0], r))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: the largest homological index with an entry.
    pub fn pdim(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Castelnuovo-Mumford regularity: `max (j - i)` over entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|(i, d)| d.iter().sum::<u32>() as i64 - *i as i64)
            .max()
    }

    /// Smallest total shift in column `i`.
    pub fn min_shift(&self, i: usize) -> Option<u32> {
        self.column_degrees(i).min()
    }

    /// Largest total shift in column `i`.
    pub fn max_shift(&self, i: usize) -> Option<u32> {
        self.column_degrees(i).max()
    }

    fn column_degrees(&self, i: usize) -> impl Iterator<Item = u32> + '_ {
        self.entries
            .keys()
            .filter(move |(k, _)| *k == i)
            .map(|(_, d)| d.iter().sum::<u32>())
    }

    /// Sum of all ranks in column `i`.
    pub fn column_sum(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, r)| r).sum()
    }

    fn coarsen_unchecked_total(&self) -> BettiTable {
        let mut out = BettiTable::total();
        for ((i, d), r) in &self.entries {
            out.add(*i, vec![d.iter().sum()], *r);
        }
        out
    }

    /// Sums entries by projected degree. Only coarsening (or identity) is
    /// allowed.
    pub fn coarsen(&self, target: GradingKind) -> Result<BettiTable> {
        let from = self.grading.kind();
        if Grading::rank(target) > Grading::rank(from) {
            return Err(Error::InvalidCoarsening {
                from: from.to_string(),
                to: target.to_string(),
            });
        }
        match (&self.grading, target) {
            (_, GradingKind::Total) => Ok(self.coarsen_unchecked_total()),
            (Grading::Fine { blocks }, GradingKind::Block) => {
                let map: Vec<usize> = blocks
                    .iter()
                    .enumerate()
                    .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
                    .collect();
                let mut out = BettiTable::new(Grading::Block { blocks: blocks.clone() });
                for ((i, d), r) in &self.entries {
                    let mut bd = vec![0; blocks.len()];
                    for (e, b) in d.iter().zip(&map) {
                        bd[*b] += e;
                    }
                    out.add(*i, bd, *r);
                }
                Ok(out)
            }
            _ => Ok(self.clone()),
        }
    }

    /// Entrywise sum of two tables of the same grading.
    pub fn plus(&self, other: &BettiTable) -> Result<BettiTable> {
        if self.grading != other.grading {
            return Err(Error::Precondition("adding tables of different gradings".into()));
        }
        let mut out = self.clone();
        for ((i, d), r) in &other.entries {
            out.add(*i, d.clone(), *r);
        }
        Ok(out)
    }

    /// Moves every entry from column `i` to column `i + 1`.
    pub fn shift_homological(&self) -> BettiTable {
        let mut out = BettiTable::new(self.grading.clone());
        for ((i, d), r) in &self.entries {
            out.add(i + 1, d.clone(), *r);
        }
        out
    }

    /// True when every entry lies on the row `j - i = d`.
    pub fn is_linear(&self, d: u32) -> bool {
        self.entries
            .keys()
            .all(|(i, deg)| deg.iter().sum::<u32>() as i64 - *i as i64 == d as i64)
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable({:?}) {{", self.grading.kind())?;
        for ((i, d), r) in &self.entries {
            write!(f, " ({i},{d:?}):{r}")?;
        }
        write!(f, " }}")
    }
}

/// Macaulay2-style rendering of the total table: rows `j - i`, columns `i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let total = self.coarsen_unchecked_total();
        let Some(pd) = total.pdim() else {
            return writeln!(f, "(zero table)");
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = total.entries.keys().map(|(i, d)| d[0] as i64 - *i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let width = total.entries.values().map(|r| r.to_string().len()).max().unwrap_or(1).max(2);
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        for row in rows {
            write!(f, "{:>5}:", row)?;
            for i in 0..=pd {
                let j = row + i as i64;
                let v = if j >= 0 { total.get(i, &[j as u32]) } else { 0 };
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {:>width$}", v)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
