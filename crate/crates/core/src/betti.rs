//! Graded Betti numbers of squarefree monomial ideals via Hochster's formula
//!
//! ```text
//! β_{i,j}(I_Δ) = Σ_{|W| = j} dim_K H̃_{j-i-2}(Δ|_W; K)
//! ```
//!
//! and the invariants read off the table: regularity, projective dimension and
//! (through Auslander–Buchsbaum) depth of the quotient.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homology::{homology_of_generated, FieldSpec};
use crate::ideal::{complement_edge_ideal, SquarefreeIdeal};

/// Hochster's sum visits all `2^n` vertex subsets.
pub const MAX_BETTI_VARIABLES: usize = 24;

const PARALLEL_THRESHOLD: usize = 12;

/// Sparse graded Betti table `(i, j) -> β_{i,j}(I)` of an ideal (not of the quotient).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `t_i = max { j : β_{i,j} ≠ 0 }`.
    pub fn max_shift(&self, i: usize) -> Option<usize> {
        self.entries.keys().filter(|(a, _)| *a == i).map(|&(_, j)| j).max()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().expect("table of a nonzero ideal")
    }

    /// `max { i : β_{i,j} ≠ 0 }`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().expect("table of a nonzero ideal")
    }

    /// `depth S/I = n - pd(S/I) = n - (pd(I) + 1)`.
    pub fn depth_quotient(&self) -> usize {
        self.n - self.projective_dimension() - 1
    }

    /// Whether every nonzero entry lies on the line `j = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + d)
    }

    /// Entrywise `self ≤ other`.
    pub fn is_dominated_by(&self, other: &BettiTable) -> bool {
        self.entries.iter().all(|(&(i, j), &b)| b <= other.get(i, j))
    }
}

/// Betti table of `I` over `field`.
pub fn betti_table(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<BettiTable> {
    let n = ideal.ambient_n();
    if n > MAX_BETTI_VARIABLES {
        return Err(Error::TooManyVariables { n, limit: MAX_BETTI_VARIABLES });
    }
    let indeg = ideal.indeg()?;
    let facets: Vec<u64> = ideal.stanley_reisner_complex()?.facets().map(VertexSet::bits).collect();

    let contribution = |w: u64, acc: &mut BTreeMap<(usize, usize), u64>| {
        let j = w.count_ones() as usize;
        if j < indeg {
            return;
        }
        let mut gens: Vec<u64> = facets.iter().map(|&f| f & w).collect();
        gens.sort_unstable();
        gens.dedup();
        for (k, d) in homology_of_generated(&gens, field).nonzero() {
            // i = j - k - 2 must be a valid homological degree
            let i = j as isize - k - 2;
            if i >= 0 {
                *acc.entry((i as usize, j)).or_insert(0) += d as u64;
            }
        }
    };

    let total = 1u64 << n;
    let entries = if n >= PARALLEL_THRESHOLD {
        (1..total)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc, w| {
                contribution(w, &mut acc);
                acc
            })
            .reduce(BTreeMap::new, merge)
    } else {
        let mut acc = BTreeMap::new();
        for w in 1..total {
            contribution(w, &mut acc);
        }
        acc
    };
    Ok(BettiTable { n, field, entries })
}

fn merge(mut a: BTreeMap<(usize, usize), u64>, b: BTreeMap<(usize, usize), u64>) -> BTreeMap<(usize, usize), u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

pub fn regularity(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.regularity())
}

pub fn projective_dimension(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.projective_dimension())
}

/// `depth S/I` by Auslander–Buchsbaum.
pub fn depth_quotient(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.depth_quotient())
}

/// `depth S/I^∨`, with the dual taken in the ambient ring of `I`.
pub fn dual_depth(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<usize> {
    depth_quotient(&ideal.alexander_dual()?, field)
}

/// Whether `I` has a `d`-linear resolution, `d` the common generator degree.
pub fn has_linear_resolution(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<bool> {
    let d = ideal.equigenerated_degree().ok_or(if ideal.is_zero() { Error::ZeroIdeal } else { Error::MixedDegrees })?;
    Ok(betti_table(ideal, field)?.is_linear(d))
}

/// Summary of the invariants of `I` and `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub reg: usize,
    pub pd_ideal: usize,
    pub depth_quotient: usize,
    pub dim_quotient: usize,
    pub is_cm: bool,
    /// False for ideals with generators of mixed degree.
    pub has_linear_res: bool,
    pub field: FieldSpec,
}

impl InvariantReport {
    pub fn from_table(ideal: &SquarefreeIdeal, table: &BettiTable) -> Result<Self> {
        let dim = ideal.krull_dim_quotient()?;
        let depth = table.depth_quotient();
        Ok(InvariantReport {
            reg: table.regularity(),
            pd_ideal: table.projective_dimension(),
            depth_quotient: depth,
            dim_quotient: dim,
            is_cm: depth == dim,
            has_linear_res: ideal.equigenerated_degree().is_some_and(|d| table.is_linear(d)),
            field: table.field(),
        })
    }
}

pub fn invariants(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<InvariantReport> {
    InvariantReport::from_table(ideal, &betti_table(ideal, field)?)
}

/// JSON form of a Betti table with its headline invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub n: usize,
    pub field: FieldSpec,
    pub entries: Vec<BettiEntry>,
    pub reg: usize,
    pub pd: usize,
    pub depth: usize,
    pub dim: usize,
    pub linear: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

impl BettiJson {
    pub fn new(ideal: &SquarefreeIdeal, table: &BettiTable) -> Result<Self> {
        let report = InvariantReport::from_table(ideal, table)?;
        Ok(BettiJson {
            n: table.ambient_n(),
            field: table.field(),
            entries: table.entries().map(|((i, j), beta)| BettiEntry { i, j, beta }).collect(),
            reg: report.reg,
            pd: report.pd_ideal,
            depth: report.depth_quotient,
            dim: report.dim_quotient,
            linear: report.has_linear_res,
        })
    }
}

/// Runtime check of the Eagon–Reiner equivalence for an ideal generated in
/// degree `q`: `I` has a `q`-linear resolution iff `S/I^∨` is Cohen–Macaulay of
/// dimension `n - q`.
pub fn check_eagon_reiner(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<bool> {
    let q = ideal.equigenerated_degree().ok_or(if ideal.is_zero() { Error::ZeroIdeal } else { Error::MixedDegrees })?;
    let linear = has_linear_resolution(ideal, field)?;
    let dual = ideal.alexander_dual()?;
    let dim = dual.krull_dim_quotient()?;
    let depth = depth_quotient(&dual, field)?;
    let dual_cm_of_expected_dim = depth == dim && dim + q == ideal.ambient_n();
    Ok(linear == dual_cm_of_expected_dim)
}

/// Runtime check of `dim S/I^∨ - depth S/I^∨ = reg(I) - indeg(I)`, valid when
/// `dim S/I ≤ n - 2`.
pub fn check_terai(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<bool> {
    let n = ideal.ambient_n();
    let dim = ideal.krull_dim_quotient()?;
    if dim + 2 > n {
        return Err(Error::NotApplicable(format!("dim S/I = {dim} exceeds n - 2 = {}", n as isize - 2)));
    }
    let dual = ideal.alexander_dual()?;
    let lhs = dual.krull_dim_quotient()? as isize - depth_quotient(&dual, field)? as isize;
    let rhs = regularity(ideal, field)? as isize - ideal.indeg()? as isize;
    Ok(lhs == rhs)
}

/// Entrywise `β(I(H̄)) ≤ β(I(Ḡ))` for the induced subgraph `H = G[W]`.
pub fn betti_monotonicity_check(g: &Graph, w: VertexSet, field: FieldSpec) -> Result<bool> {
    let h = g.induced_subgraph(w)?;
    let small = betti_table(&complement_edge_ideal(&h), field)?;
    let big = betti_table(&complement_edge_ideal(g), field)?;
    Ok(small.is_dominated_by(&big))
}
