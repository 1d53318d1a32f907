//! Property suites: exhaustive over labelled graphs for small `n`, seeded
//! random sampling beyond. Instances are generated sequentially from the seed
//! and then checked in parallel, so reports are deterministic.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{
    betti_monotonicity_check, check_eagon_reiner, check_terai, depth_quotient, dual_depth, has_linear_resolution,
    regularity,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, DEFAULT_SEPARATOR_CAP};
use crate::homology::FieldSpec;
use crate::ideal::{complement_edge_ideal, edge_ideal, SquarefreeIdeal};
use crate::random::{
    random_equigenerated_ideal, random_glued_pair, random_noncomplete_graph, random_permutation, random_squarefree_ideal,
    random_subset, seeded, GluedPair,
};
use crate::reduction::{froberg_classify, regularity_via_reduction, ReductionOptions};

/// Largest `n` enumerated exhaustively; bigger graphs are sampled.
pub const EXHAUSTIVE_LIMIT: usize = 6;
pub const MAX_SUITE_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Froberg,
    Cycles,
    Reductions,
    Gluing,
    Terai,
    EagonReiner,
    Monotonicity,
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Froberg,
        Suite::Cycles,
        Suite::Reductions,
        Suite::Gluing,
        Suite::Terai,
        Suite::EagonReiner,
        Suite::Monotonicity,
        Suite::Lemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Froberg => "froberg",
            Suite::Cycles => "cycles",
            Suite::Reductions => "reductions",
            Suite::Gluing => "gluing",
            Suite::Terai => "terai",
            Suite::EagonReiner => "eagon-reiner",
            Suite::Monotonicity => "monotonicity",
            Suite::Lemmas => "lemmas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Precondition(format!("unknown suite '{s}' (expected one of: {})", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub field: FieldSpec,
    pub max_n: usize,
    pub seed: u64,
    /// Random instances per sampled size or sub-check.
    pub samples: usize,
    pub separator_cap: usize,
    /// Graphs to use instead of random sampling above the exhaustive limit.
    pub graphs: Option<Vec<Graph>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            field: FieldSpec::Rationals,
            max_n: EXHAUSTIVE_LIMIT,
            seed: 1,
            samples: 200,
            separator_cap: DEFAULT_SEPARATOR_CAP,
            graphs: None,
        }
    }
}

/// Counts for one family of checks inside a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub label: String,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl Tally {
    fn new(label: impl Into<String>) -> Self {
        Tally { label: label.into(), checked: 0, failures: 0, first_counterexample: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(witness());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub field: FieldSpec,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
    pub breakdown: Vec<Tally>,
    pub errors: Vec<String>,
}

impl SuiteReport {
    fn from_tallies(suite: Suite, field: FieldSpec, breakdown: Vec<Tally>, errors: Vec<String>) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            field,
            checked: breakdown.iter().map(|t| t.checked).sum(),
            failures: breakdown.iter().map(|t| t.failures).sum(),
            first_counterexample: breakdown.iter().find_map(|t| t.first_counterexample.clone()),
            breakdown,
            errors,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.errors.is_empty()
    }

    pub fn tally(&self, label: &str) -> Option<&Tally> {
        self.breakdown.iter().find(|t| t.label == label)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{} [{}] over {}: {} checked, {} failures", verdict, self.suite, self.field, self.checked, self.failures)?;
        for t in &self.breakdown {
            writeln!(f, "  {:<28} {:>7} checked {:>5} failures", t.label, t.checked, t.failures)?;
        }
        if let Some(c) = &self.first_counterexample {
            writeln!(f, "  first counterexample: {c}")?;
        }
        for e in &self.errors {
            writeln!(f, "  error: {e}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    if config.max_n > MAX_SUITE_N {
        return Err(Error::Precondition(format!("max_n must be at most {MAX_SUITE_N}")));
    }
    match suite {
        Suite::Froberg => froberg(config),
        Suite::Cycles => cycles(config),
        Suite::Reductions => reductions(config),
        Suite::Gluing => gluing(config),
        Suite::Terai => terai(config),
        Suite::EagonReiner => eagon_reiner(config),
        Suite::Monotonicity => monotonicity(config),
        Suite::Lemmas => lemmas(config),
    }
}

/// Every labelled graph on `n` vertices, by bit-counting over the edge set.
pub fn all_labelled_graphs(n: usize) -> Result<Vec<Graph>> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    if pairs.len() > 24 {
        return Err(Error::Precondition(format!("refusing to enumerate 2^{} graphs", pairs.len())));
    }
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            Graph::from_edges(n, edges)
        })
        .collect()
}

/// Exhaustive graphs for `n ≤ min(max_n, 6)`, then either the supplied graphs
/// or `samples` random non-complete graphs per size up to `max_n`.
fn graph_instances(config: &SuiteConfig, min_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min_n..=config.max_n.min(EXHAUSTIVE_LIMIT) {
        out.extend(all_labelled_graphs(n)?);
    }
    match &config.graphs {
        Some(gs) => out.extend(gs.iter().cloned()),
        None => {
            let mut rng = seeded(config.seed);
            for n in EXHAUSTIVE_LIMIT + 1..=config.max_n {
                for _ in 0..config.samples {
                    out.push(random_noncomplete_graph(&mut rng, n)?);
                }
            }
        }
    }
    Ok(out)
}

/// Check instances in parallel; results are folded in input order.
fn check_all<T, F, W>(instances: &[T], tally: &mut Tally, errors: &mut Vec<String>, check: F, witness: W)
where
    T: Sync,
    F: Fn(&T) -> Result<bool> + Sync,
    W: Fn(&T) -> String,
{
    let results: Vec<Result<bool>> = instances.par_iter().map(&check).collect();
    for (inst, res) in instances.iter().zip(results) {
        match res {
            Ok(ok) => tally.record(ok, || witness(inst)),
            Err(e) => {
                tally.record(false, || witness(inst));
                errors.push(format!("{}: {e}", witness(inst)));
            }
        }
    }
}

fn froberg(config: &SuiteConfig) -> Result<SuiteReport> {
    let graphs: Vec<Graph> = graph_instances(config, 2)?.into_iter().filter(|g| !g.is_complete()).collect();
    let mut tally = Tally::new("chordal iff linear");
    let mut errors = Vec::new();
    check_all(&graphs, &mut tally, &mut errors, |g| Ok(froberg_classify(g, config.field)?.consistent), |g| g.to_graph6());
    Ok(SuiteReport::from_tallies(Suite::Froberg, config.field, vec![tally], errors))
}

fn cycles(config: &SuiteConfig) -> Result<SuiteReport> {
    let graphs = (4..=config.max_n.max(4)).map(Graph::cycle).collect::<Result<Vec<_>>>()?;
    let opts = ReductionOptions { field: config.field, separator_cap: config.separator_cap, verify: false };
    let mut oracle = Tally::new("oracle reg = 3");
    let mut reduction = Tally::new("reduction reg = 3");
    let mut errors = Vec::new();
    check_all(&graphs, &mut oracle, &mut errors, |g| Ok(regularity(&complement_edge_ideal(g), config.field)? == 3), |g| {
        g.to_graph6()
    });
    check_all(&graphs, &mut reduction, &mut errors, |g| Ok(regularity_via_reduction(g, &opts)?.0 == Some(3)), |g| {
        g.to_graph6()
    });
    Ok(SuiteReport::from_tallies(Suite::Cycles, config.field, vec![oracle, reduction], errors))
}

fn reductions(config: &SuiteConfig) -> Result<SuiteReport> {
    let graphs: Vec<Graph> = graph_instances(config, 2)?.into_iter().filter(|g| !g.is_complete()).collect();
    let opts = ReductionOptions { field: config.field, separator_cap: config.separator_cap, verify: true };
    let mut steps = Tally::new("steps verified");
    let mut totals = Tally::new("reduction = oracle");
    let mut errors = Vec::new();
    let results: Vec<Result<(Vec<bool>, bool)>> = graphs
        .par_iter()
        .map(|g| {
            let (reg, trace) = regularity_via_reduction(g, &opts)?;
            let verdicts = trace.flatten().iter().map(|s| s.verified == Some(true)).collect();
            let oracle = regularity(&complement_edge_ideal(g), config.field)?;
            Ok((verdicts, reg == Some(oracle)))
        })
        .collect();
    for (g, res) in graphs.iter().zip(results) {
        match res {
            Ok((verdicts, agrees)) => {
                for ok in verdicts {
                    steps.record(ok, || g.to_graph6());
                }
                totals.record(agrees, || g.to_graph6());
            }
            Err(e) => errors.push(format!("{}: {e}", g.to_graph6())),
        }
    }

    // the returned value must not depend on the labelling
    let mut rng = seeded(config.seed ^ 0x5eed);
    let relabelled: Vec<(Graph, Graph)> = (0..config.samples)
        .map(|_| {
            let n = rng.gen_range(5..=config.max_n.clamp(5, 9));
            let g = random_noncomplete_graph(&mut rng, n)?;
            let h = g.relabel(&random_permutation(&mut rng, n))?;
            Ok((g, h))
        })
        .collect::<Result<_>>()?;
    let plain = ReductionOptions { verify: false, ..opts };
    let mut confluence = Tally::new("relabelling invariance");
    check_all(
        &relabelled,
        &mut confluence,
        &mut errors,
        |(g, h)| Ok(regularity_via_reduction(g, &plain)?.0 == regularity_via_reduction(h, &plain)?.0),
        |(g, _)| g.to_graph6(),
    );
    Ok(SuiteReport::from_tallies(Suite::Reductions, config.field, vec![steps, totals, confluence], errors))
}

/// `I(Ḡ[part])` as an ideal of the full ring of `g`.
fn complement_edge_ideal_on(g: &Graph, part: VertexSet) -> Result<SquarefreeIdeal> {
    let vs: Vec<usize> = part.iter().collect();
    let gens = vs
        .iter()
        .enumerate()
        .flat_map(|(k, &u)| vs[k + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .map(|(u, v)| VertexSet::from_vertices([u, v]));
    SquarefreeIdeal::new(g.n(), gens)
}

/// `reg I = max(reg I₁, reg I₂)` and `depth S/I^∨ = min(depth S/I₁^∨, depth S/I₂^∨)`.
pub fn check_gluing(pair: &GluedPair, field: FieldSpec) -> Result<(bool, bool)> {
    let g = &pair.glued;
    let i = complement_edge_ideal(g);
    let i1 = complement_edge_ideal_on(g, pair.part1())?;
    let i2 = complement_edge_ideal_on(g, pair.part2())?;
    let reg_ok = regularity(&i, field)? == regularity(&i1, field)?.max(regularity(&i2, field)?);
    let depth_ok = dual_depth(&i, field)? == dual_depth(&i1, field)?.min(dual_depth(&i2, field)?);
    Ok((reg_ok, depth_ok))
}

pub fn glued_instances(config: &SuiteConfig) -> Result<Vec<GluedPair>> {
    let mut rng = seeded(config.seed);
    (0..config.samples).map(|k| random_glued_pair(&mut rng, k % 4, 3)).collect()
}

fn gluing(config: &SuiteConfig) -> Result<SuiteReport> {
    let pairs = glued_instances(config)?;
    let results: Vec<Result<(bool, bool)>> = pairs.par_iter().map(|p| check_gluing(p, config.field)).collect();
    let mut tallies = vec![
        Tally::new("reg = max, |z| >= 2"),
        Tally::new("depth = min, |z| >= 2"),
        Tally::new("reg = max, |z| <= 1"),
        Tally::new("depth = min, |z| <= 1"),
    ];
    let mut errors = Vec::new();
    for (p, res) in pairs.iter().zip(results) {
        let base = if p.overlap() <= 1 { 2 } else { 0 };
        match res {
            Ok((reg_ok, depth_ok)) => {
                tallies[base].record(reg_ok, || p.glued.to_graph6());
                tallies[base + 1].record(depth_ok, || p.glued.to_graph6());
            }
            Err(e) => errors.push(format!("{}: {e}", p.glued.to_graph6())),
        }
    }
    Ok(SuiteReport::from_tallies(Suite::Gluing, config.field, tallies, errors))
}

/// Random equigenerated ideals on `4..=7` variables with `dim S/I ≤ n - 2`.
pub fn terai_instances(config: &SuiteConfig) -> Result<Vec<SquarefreeIdeal>> {
    let mut rng = seeded(config.seed);
    let mut out = Vec::with_capacity(config.samples);
    while out.len() < config.samples {
        let n = rng.gen_range(4..=7);
        let d = rng.gen_range(2..=3);
        let i = random_equigenerated_ideal(&mut rng, n, d, 8)?;
        if i.krull_dim_quotient()? + 2 <= n {
            out.push(i);
        }
    }
    Ok(out)
}

fn terai(config: &SuiteConfig) -> Result<SuiteReport> {
    let ideals = terai_instances(config)?;
    let mut tally = Tally::new("dim - depth = reg - indeg");
    let mut errors = Vec::new();
    check_all(&ideals, &mut tally, &mut errors, |i| check_terai(i, config.field), |i| i.to_string());
    Ok(SuiteReport::from_tallies(Suite::Terai, config.field, vec![tally], errors))
}

pub fn eagon_reiner_instances(config: &SuiteConfig) -> Result<Vec<SquarefreeIdeal>> {
    let mut rng = seeded(config.seed);
    (0..config.samples)
        .map(|_| {
            let n = rng.gen_range(3..=7);
            let d = rng.gen_range(2..=3.min(n - 1));
            random_equigenerated_ideal(&mut rng, n, d, 10)
        })
        .collect()
}

fn eagon_reiner(config: &SuiteConfig) -> Result<SuiteReport> {
    let ideals = eagon_reiner_instances(config)?;
    let linear: Vec<Result<bool>> = ideals.par_iter().map(|i| has_linear_resolution(i, config.field)).collect();
    let mut tallies = vec![Tally::new("equivalence, linear"), Tally::new("equivalence, not linear")];
    let mut errors = Vec::new();
    let verdicts: Vec<Result<bool>> = ideals.par_iter().map(|i| check_eagon_reiner(i, config.field)).collect();
    for ((i, lin), ok) in ideals.iter().zip(linear).zip(verdicts) {
        match (lin, ok) {
            (Ok(lin), Ok(ok)) => tallies[usize::from(!lin)].record(ok, || i.to_string()),
            (Err(e), _) | (_, Err(e)) => errors.push(format!("{i}: {e}")),
        }
    }
    Ok(SuiteReport::from_tallies(Suite::EagonReiner, config.field, tallies, errors))
}

/// `(G, W)` with `n ≤ 7` and `G[W]` not complete.
pub fn monotonicity_instances(config: &SuiteConfig) -> Result<Vec<(Graph, VertexSet)>> {
    let mut rng = seeded(config.seed);
    let mut out = Vec::with_capacity(config.samples);
    while out.len() < config.samples {
        let n = rng.gen_range(3..=7);
        let g = random_noncomplete_graph(&mut rng, n)?;
        let size = rng.gen_range(2..=n);
        let w = random_subset(&mut rng, n, size);
        if !g.is_clique(w) {
            out.push((g, w));
        }
    }
    Ok(out)
}

fn monotonicity(config: &SuiteConfig) -> Result<SuiteReport> {
    let pairs = monotonicity_instances(config)?;
    let mut tally = Tally::new("induced subgraph dominated");
    let mut errors = Vec::new();
    check_all(&pairs, &mut tally, &mut errors, |(g, w)| betti_monotonicity_check(g, *w, config.field), |(g, w)| {
        format!("{} W={w}", g.to_graph6())
    });
    Ok(SuiteReport::from_tallies(Suite::Monotonicity, config.field, vec![tally], errors))
}

/// `I` on variables `f+1..=f+k` and the fresh monomial `x_1⋯x_f`.
#[derive(Clone, Debug)]
pub struct FreshMultiple {
    pub ideal: SquarefreeIdeal,
    pub monomial: VertexSet,
}

pub fn fresh_multiple_instances(config: &SuiteConfig) -> Result<Vec<FreshMultiple>> {
    let mut rng = seeded(config.seed);
    (0..config.samples)
        .map(|_| {
            let f = rng.gen_range(1..=3);
            let k = rng.gen_range(2..=5);
            let base = random_squarefree_ideal(&mut rng, k, 3, 5)?;
            let map: Vec<usize> = (1..=k).map(|v| v + f).collect();
            Ok(FreshMultiple { ideal: base.relabel(f + k, &map)?, monomial: VertexSet::from_vertices(1..=f) })
        })
        .collect()
}

pub fn check_fresh_multiple(inst: &FreshMultiple, field: FieldSpec) -> Result<bool> {
    let product = inst.ideal.multiply(inst.monomial)?;
    Ok(depth_quotient(&product, field)? == depth_quotient(&inst.ideal, field)?)
}

/// Graphs with `{1,2}` an edge and no vertex adjacent to both `1` and `2`.
pub fn edge_hypothesis_instances(config: &SuiteConfig) -> Result<Vec<Graph>> {
    let mut rng = seeded(config.seed ^ 0x24);
    (0..config.samples)
        .map(|_| {
            let n = rng.gen_range(3..=7);
            let mut g = random_noncomplete_graph(&mut rng, n)?;
            g.add_edge(1, 2);
            for i in 3..=n {
                if g.has_edge(1, i) && g.has_edge(2, i) {
                    let drop = if rng.gen_bool(0.5) { 1 } else { 2 };
                    g.remove_edge(drop, i);
                }
            }
            Ok(g)
        })
        .collect()
}

/// `depth S/(I^∨ + (x₁,x₂)) ≥ depth S/I^∨ - 1` and
/// `depth S/(I^∨ ∩ (x₁,x₂)) ≥ depth S/I^∨` for `I = I(Ḡ)`.
pub fn check_edge_depths(g: &Graph, field: FieldSpec) -> Result<(bool, bool)> {
    let dual = complement_edge_ideal(g).alexander_dual()?;
    let p = SquarefreeIdeal::prime(g.n(), VertexSet::from_vertices([1, 2]))?;
    let t = depth_quotient(&dual, field)?;
    let sum = depth_quotient(&dual.sum(&p)?, field)?;
    let meet = depth_quotient(&dual.intersection(&p)?, field)?;
    Ok((sum + 1 >= t, meet >= t))
}

/// `I` on `x ∪ z` and `J = I + (x_i y_j)`, with `x = 1..=a`, `z = a+1..=a+r`,
/// `y = a+r+1..=n`.
#[derive(Clone, Debug)]
pub struct JoinInstance {
    pub i: SquarefreeIdeal,
    pub x: VertexSet,
    pub y: VertexSet,
    pub z: VertexSet,
}

impl JoinInstance {
    pub fn n(&self) -> usize {
        self.i.ambient_n()
    }

    pub fn joined(&self) -> Result<SquarefreeIdeal> {
        let cross = self.x.iter().flat_map(|u| self.y.iter().map(move |v| VertexSet::from_vertices([u, v])));
        SquarefreeIdeal::new(self.n(), self.i.generators().chain(cross))
    }

    /// `I^∨ ∩ (x_1⋯x_a, y_1⋯y_b)`.
    pub fn predicted_dual(&self) -> Result<SquarefreeIdeal> {
        let xy = SquarefreeIdeal::new(self.n(), [self.x, self.y])?;
        self.i.alexander_dual()?.intersection(&xy)
    }
}

/// `squarefree` picks arbitrary generators on `x ∪ z`; otherwise `I` is an
/// edge ideal with no `z_i z_j` among its generators.
pub fn join_instances(config: &SuiteConfig, squarefree: bool) -> Result<Vec<JoinInstance>> {
    let mut rng = seeded(config.seed ^ if squarefree { 0x22 } else { 0x2222 });
    let mut out = Vec::with_capacity(config.samples);
    while out.len() < config.samples {
        let a = rng.gen_range(1..=3);
        let r = rng.gen_range(0..=2);
        let b = rng.gen_range(1..=3);
        let n = a + r + b;
        let xz = a + r;
        let x = VertexSet::from_vertices(1..=a);
        let z = VertexSet::from_vertices(a + 1..=xz);
        let y = VertexSet::from_vertices(xz + 1..=n);
        let i = if squarefree {
            random_squarefree_ideal(&mut rng, xz, 3, 5)?.with_ambient(n)?
        } else {
            let mut h = random_noncomplete_graph(&mut rng, xz.max(2))?;
            for u in z.iter() {
                for v in z.iter() {
                    if u < v {
                        h.remove_edge(u, v);
                    }
                }
            }
            let e = edge_ideal(&h);
            if e.is_zero() || h.n() != xz {
                continue;
            }
            e.with_ambient(n)?
        };
        out.push(JoinInstance { i, x, y, z });
    }
    Ok(out)
}

fn lemmas(config: &SuiteConfig) -> Result<SuiteReport> {
    let field = config.field;
    let mut errors = Vec::new();

    let mut fresh = Tally::new("fresh multiple depth");
    let multiples = fresh_multiple_instances(config)?;
    check_all(&multiples, &mut fresh, &mut errors, |m| check_fresh_multiple(m, field), |m| {
        format!("{} times {}", m.ideal, m.monomial)
    });

    let mut sum = Tally::new("depth of dual + (x1,x2)");
    let mut meet = Tally::new("depth of dual ∩ (x1,x2)");
    let graphs = edge_hypothesis_instances(config)?;
    let depths: Vec<Result<(bool, bool)>> = graphs.par_iter().map(|g| check_edge_depths(g, field)).collect();
    for (g, res) in graphs.iter().zip(depths) {
        match res {
            Ok((a, b)) => {
                sum.record(a, || g.to_graph6());
                meet.record(b, || g.to_graph6());
            }
            Err(e) => errors.push(format!("{}: {e}", g.to_graph6())),
        }
    }

    let mut dual = Tally::new("dual of join");
    let joins = join_instances(config, true)?;
    check_all(&joins, &mut dual, &mut errors, |j| Ok(j.joined()?.alexander_dual()? == j.predicted_dual()?), |j| {
        format!("{} x={} y={}", j.i, j.x, j.y)
    });

    let mut reg = Tally::new("reg of join");
    let edge_joins = join_instances(config, false)?;
    check_all(
        &edge_joins,
        &mut reg,
        &mut errors,
        |j| Ok(regularity(&j.i, field)? == regularity(&j.joined()?, field)?),
        |j| format!("{} x={} y={}", j.i, j.x, j.y),
    );

    Ok(SuiteReport::from_tallies(Suite::Lemmas, field, vec![fresh, sum, meet, dual, reg], errors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig { max_n: 4, samples: 20, ..SuiteConfig::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn labelled_graph_counts() {
        assert_eq!(all_labelled_graphs(4).unwrap().len(), 64);
        assert_eq!(all_labelled_graphs(1).unwrap().len(), 1);
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let report = run_suite(s, &small()).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0, "{report}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Gluing, &small()).unwrap();
        let b = run_suite(Suite::Gluing, &small()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn oversized_bound_is_rejected() {
        let cfg = SuiteConfig { max_n: 11, ..SuiteConfig::default() };
        assert!(run_suite(Suite::Froberg, &cfg).is_err());
    }
}
