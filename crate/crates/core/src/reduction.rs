//! Regularity-preserving reductions of a graph `G`, acting on `reg I(Ḡ)`.
//!
//! Moves, in priority order:
//!
//! 1. delete a simplicial vertex `v` when `G \ v` is not complete;
//! 2. a simplicial vertex with `G \ v` complete is a base case, `reg = 2`;
//! 3. smooth a degree-2 vertex (inverse of an edge subdivision);
//! 4. split along a clique separator `P ∩ Q`;
//! 5. a chordless cycle of length `> 3` is a base case, `reg = 3`.
//!
//! When no move applies the Hochster oracle in [`crate::betti`] supplies the
//! value. Every step records its before/after graphs so it can be re-checked.

use std::fmt::Write as _;

use serde::Serialize;

use crate::betti::{self, has_linear_resolution};
use crate::error::{Error, Result};
use crate::graph::{
    find_decomposition, is_chordal, is_cycle_graph, smooth, Graph, VertexSet,
    DEFAULT_SEPARATOR_CAP,
};
use crate::graph::smoothing::smoothable_at;
use crate::homology::FieldSpec;
use crate::ideal::complement_edge_ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionOptions {
    pub field: FieldSpec,
    pub separator_cap: usize,
    /// Re-check every emitted step against the oracle.
    pub verify: bool,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions { field: FieldSpec::Rationals, separator_cap: DEFAULT_SEPARATOR_CAP, verify: false }
    }
}

/// How the parts of a decomposition relate to completeness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitCase {
    BothComplete,
    /// Exactly one part is complete; the value comes from the other part.
    OneComplete,
    NeitherComplete,
}

impl SplitCase {
    fn of(p: &Graph, q: &Graph) -> Self {
        match (p.is_complete(), q.is_complete()) {
            (true, true) => SplitCase::BothComplete,
            (false, false) => SplitCase::NeitherComplete,
            _ => SplitCase::OneComplete,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            SplitCase::BothComplete => "both-complete",
            SplitCase::OneComplete => "one-complete",
            SplitCase::NeitherComplete => "neither-complete",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    RemoveSimplicial { v: usize },
    Smooth { w: usize, a: usize, b: usize },
    Split { p: VertexSet, q: VertexSet, case: SplitCase },
    BaseCompleteMinusSimplicial { v: usize },
    BaseCycle { len: usize },
    BaseDecomposableBothComplete { p: VertexSet, q: VertexSet },
    FallbackOracle { reg: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepResult {
    Graph(Graph),
    /// `(G_P, G_Q)`, both relabelled.
    Parts(Graph, Graph),
    Terminal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub before: Graph,
    pub after: StepResult,
}

impl ReductionStep {
    pub fn rule(&self) -> String {
        match &self.kind {
            StepKind::RemoveSimplicial { v } => format!("RemoveSimplicial(v={v})"),
            StepKind::Smooth { w, a, b } => format!("Smooth(w={w},a={a},b={b})"),
            StepKind::Split { p, q, case } => format!("Split(P={p},Q={q},case={})", case.tag()),
            StepKind::BaseCompleteMinusSimplicial { v } => format!("BaseCompleteMinusSimplicial(v={v})"),
            StepKind::BaseCycle { len } => format!("BaseCycle(n={len})"),
            StepKind::BaseDecomposableBothComplete { p, q } => format!("BaseDecomposableBothComplete(P={p},Q={q})"),
            StepKind::FallbackOracle { reg } => format!("FallbackOracle(reg={reg})"),
        }
    }

    /// Regularity asserted directly by a terminal step.
    pub fn base_value(&self) -> Option<usize> {
        match self.kind {
            StepKind::BaseCompleteMinusSimplicial { .. } | StepKind::BaseDecomposableBothComplete { .. } => Some(2),
            StepKind::BaseCycle { .. } => Some(3),
            StepKind::FallbackOracle { reg } => Some(reg),
            _ => None,
        }
    }

    /// Size of the clique separator for splits.
    pub fn separator_size(&self) -> Option<usize> {
        match self.kind {
            StepKind::Split { p, q, .. } | StepKind::BaseDecomposableBothComplete { p, q } => {
                Some(p.intersection(q).len())
            }
            _ => None,
        }
    }

    /// Re-validate the move's hypotheses against the recorded graphs.
    pub fn hypothesis_holds(&self) -> bool {
        let g = &self.before;
        if g.is_complete() {
            return false;
        }
        match (&self.kind, &self.after) {
            (StepKind::RemoveSimplicial { v }, StepResult::Graph(h)) => {
                g.is_simplicial(*v).unwrap_or(false)
                    && g.remove_vertex(*v).as_ref() == Ok(h)
                    && !h.is_complete()
            }
            (StepKind::Smooth { w, a, b }, StepResult::Graph(h)) => {
                let ok_before = g.degree(*w) == 2
                    && g.neighbors(*w) == VertexSet::from_vertices([*a, *b])
                    && smooth(g, *w).as_ref() == Ok(h);
                let shift = |x: usize| if x > *w { x - 1 } else { x };
                ok_before && !h.is_complete() && subdivision_hypothesis(h, shift(*a), shift(*b))
            }
            (StepKind::Split { p, q, case }, StepResult::Parts(gp, gq)) => {
                split_parts_match(g, *p, *q, gp, gq) && SplitCase::of(gp, gq) == *case && *case != SplitCase::BothComplete
            }
            (StepKind::BaseDecomposableBothComplete { p, q }, StepResult::Parts(gp, gq)) => {
                split_parts_match(g, *p, *q, gp, gq) && gp.is_complete() && gq.is_complete()
            }
            (StepKind::BaseCompleteMinusSimplicial { v }, StepResult::Terminal) => {
                g.is_simplicial(*v).unwrap_or(false) && g.remove_vertex(*v).is_ok_and(|h| h.is_complete())
            }
            (StepKind::BaseCycle { len }, StepResult::Terminal) => *len > 3 && is_cycle_graph(g) == Some(*len),
            (StepKind::FallbackOracle { .. }, StepResult::Terminal) => true,
            _ => false,
        }
    }
}

fn split_parts_match(g: &Graph, p: VertexSet, q: VertexSet, gp: &Graph, gq: &Graph) -> bool {
    crate::graph::Decomposition { p, q }.is_valid_for(g)
        && g.induced_subgraph(p).as_ref() == Ok(gp)
        && g.induced_subgraph(q).as_ref() == Ok(gq)
}

/// `{a, b}` is an edge and no third vertex is adjacent to both ends.
fn subdivision_hypothesis(h: &Graph, a: usize, b: usize) -> bool {
    h.has_edge(a, b) && h.neighbors(a).intersection(h.neighbors(b)).is_empty()
}

fn remains_complete_without(g: &Graph, v: usize) -> bool {
    let rest = g.vertices().difference(VertexSet::from_vertices([v]));
    g.is_clique(rest)
}

/// Apply the first applicable move. `Ok(None)` means no move applies.
pub fn reduce_once(g: &Graph, separator_cap: usize) -> Result<Option<ReductionStep>> {
    if g.is_complete() {
        return Err(Error::ZeroIdeal);
    }
    let simplicial: Vec<usize> = (1..=g.n()).filter(|&v| g.is_clique(g.neighbors(v))).collect();
    if let Some(&v) = simplicial.iter().find(|&&v| !remains_complete_without(g, v)) {
        let after = g.remove_vertex(v)?;
        return Ok(Some(ReductionStep { kind: StepKind::RemoveSimplicial { v }, before: g.clone(), after: StepResult::Graph(after) }));
    }
    if let Some(&v) = simplicial.first() {
        return Ok(Some(ReductionStep {
            kind: StepKind::BaseCompleteMinusSimplicial { v },
            before: g.clone(),
            after: StepResult::Terminal,
        }));
    }
    if let Some(step) = smoothing_step(g)? {
        return Ok(Some(step));
    }
    if let Some(d) = find_decomposition(g, separator_cap) {
        let gp = g.induced_subgraph(d.p)?;
        let gq = g.induced_subgraph(d.q)?;
        let case = SplitCase::of(&gp, &gq);
        let kind = match case {
            SplitCase::BothComplete => StepKind::BaseDecomposableBothComplete { p: d.p, q: d.q },
            _ => StepKind::Split { p: d.p, q: d.q, case },
        };
        return Ok(Some(ReductionStep { kind, before: g.clone(), after: StepResult::Parts(gp, gq) }));
    }
    if let Some(len) = is_cycle_graph(g).filter(|&len| len > 3) {
        return Ok(Some(ReductionStep { kind: StepKind::BaseCycle { len }, before: g.clone(), after: StepResult::Terminal }));
    }
    Ok(None)
}

/// First smoothable vertex whose smoothed graph is not complete.
fn smoothing_step(g: &Graph) -> Result<Option<ReductionStep>> {
    for w in 1..=g.n() {
        let Some(s) = smoothable_at(g, w) else { continue };
        let after = smooth(g, w)?;
        let (a, b) = s.relabelled_ends();
        if !after.is_complete() && subdivision_hypothesis(&after, a, b) {
            let kind = StepKind::Smooth { w, a: s.a, b: s.b };
            return Ok(Some(ReductionStep { kind, before: g.clone(), after: StepResult::Graph(after) }));
        }
    }
    Ok(None)
}

/// One entry of a trace. Splits carry the traces of their parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub step: ReductionStep,
    pub verified: Option<bool>,
    pub branches: Vec<Vec<TraceStep>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input: Graph,
    pub steps: Vec<TraceStep>,
    /// `None` when the input is complete, so `I(Ḡ)` is the zero ideal.
    pub reg: Option<usize>,
    /// Splits along separators of size 0 or 1, which the gluing rule does
    /// not strictly cover, and failed verifications.
    pub flags: Vec<String>,
}

impl ReductionTrace {
    /// Steps in preorder (a split is followed by its branches, in order).
    pub fn flatten(&self) -> Vec<&TraceStep> {
        fn walk<'a>(steps: &'a [TraceStep], out: &mut Vec<&'a TraceStep>) {
            for s in steps {
                out.push(s);
                for b in &s.branches {
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.steps, &mut out);
        out
    }

    pub fn used_oracle(&self) -> bool {
        self.flatten().iter().any(|s| matches!(s.step.kind, StepKind::FallbackOracle { .. }))
    }

    pub fn all_verified(&self) -> bool {
        self.flatten().iter().all(|s| s.verified == Some(true))
    }

    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            input: self.input.to_graph6(),
            steps: self
                .flatten()
                .into_iter()
                .map(|s| StepJson {
                    rule: s.step.rule(),
                    before: s.step.before.to_graph6(),
                    after: match &s.step.after {
                        StepResult::Graph(h) => Some(AfterJson::Graph(h.to_graph6())),
                        StepResult::Parts(p, q) => Some(AfterJson::Parts { p: p.to_graph6(), q: q.to_graph6() }),
                        StepResult::Terminal => None,
                    },
                    verified: s.verified,
                })
                .collect(),
            reg: self.reg,
            flags: self.flags.clone(),
        }
    }

    /// Indented plain-text rendering.
    pub fn render(&self) -> String {
        fn walk(steps: &[TraceStep], depth: usize, out: &mut String) {
            for s in steps {
                let mark = match s.verified {
                    Some(true) => " [verified]",
                    Some(false) => " [VERIFICATION FAILED]",
                    None => "",
                };
                let _ = writeln!(out, "{:indent$}{}  {}{}", "", s.step.rule(), s.step.before.to_graph6(), mark, indent = depth * 2);
                for b in &s.branches {
                    walk(b, depth + 1, out);
                }
            }
        }
        let mut out = String::new();
        walk(&self.steps, 0, &mut out);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub input: String,
    pub steps: Vec<StepJson>,
    pub reg: Option<usize>,
    pub flags: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepJson {
    pub rule: String,
    pub before: String,
    pub after: Option<AfterJson>,
    pub verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum AfterJson {
    Graph(String),
    Parts {
        #[serde(rename = "P")]
        p: String,
        #[serde(rename = "Q")]
        q: String,
    },
}

/// Compute `reg I(Ḡ)` by reduction, falling back to the oracle when stuck.
pub fn regularity_via_reduction(g: &Graph, opts: &ReductionOptions) -> Result<(Option<usize>, ReductionTrace)> {
    if g.is_complete() {
        let trace = ReductionTrace { input: g.clone(), steps: Vec::new(), reg: None, flags: Vec::new() };
        return Ok((None, trace));
    }
    let (reg, steps, flags) = reduce_chain(g.clone(), opts)?;
    let trace = ReductionTrace { input: g.clone(), steps, reg: Some(reg), flags };
    Ok((Some(reg), trace))
}

type Chain = (usize, Vec<TraceStep>, Vec<String>);

fn reduce_chain(mut g: Graph, opts: &ReductionOptions) -> Result<Chain> {
    let mut steps = Vec::new();
    let mut flags = Vec::new();
    loop {
        let step = match reduce_once(&g, opts.separator_cap)? {
            Some(step) => step,
            None => {
                let reg = betti::regularity(&complement_edge_ideal(&g), opts.field)?;
                ReductionStep { kind: StepKind::FallbackOracle { reg }, before: g.clone(), after: StepResult::Terminal }
            }
        };
        let verified = if opts.verify { Some(verify_step(&step, opts.field)?) } else { None };
        if verified == Some(false) {
            flags.push(format!("verification failed: {} on {}", step.rule(), step.before.to_graph6()));
        }
        if let Some(r) = step.separator_size().filter(|&r| r <= 1) {
            flags.push(format!("gluing with |P∩Q| = {r}: {} on {}", step.rule(), step.before.to_graph6()));
        }

        if let Some(reg) = step.base_value() {
            steps.push(TraceStep { step, verified, branches: Vec::new() });
            return Ok((reg, steps, flags));
        }
        match (&step.kind, &step.after) {
            (StepKind::RemoveSimplicial { .. } | StepKind::Smooth { .. }, StepResult::Graph(h)) => {
                g = h.clone();
                steps.push(TraceStep { step, verified, branches: Vec::new() });
            }
            (StepKind::Split { case, .. }, StepResult::Parts(gp, gq)) => {
                let (reg, branches) = match case {
                    SplitCase::NeitherComplete => {
                        let (left, right) =
                            rayon::join(|| reduce_chain(gp.clone(), opts), || reduce_chain(gq.clone(), opts));
                        let (lr, ls, lf) = left?;
                        let (rr, rs, rf) = right?;
                        flags.extend(lf);
                        flags.extend(rf);
                        (lr.max(rr), vec![ls, rs])
                    }
                    _ => {
                        let part = if gp.is_complete() { gq } else { gp };
                        let (r, s, f) = reduce_chain(part.clone(), opts)?;
                        flags.extend(f);
                        (r, vec![s])
                    }
                };
                steps.push(TraceStep { step, verified, branches });
                return Ok((reg, steps, flags));
            }
            _ => unreachable!("reduce_once produced an inconsistent step"),
        }
    }
}

/// Re-check a step: its hypotheses, and the regularity relation it claims,
/// with both sides computed by the Hochster oracle.
pub fn verify_step(step: &ReductionStep, field: FieldSpec) -> Result<bool> {
    let reg = |h: &Graph| betti::regularity(&complement_edge_ideal(h), field);
    let before = reg(&step.before)?;
    let relation = match (&step.kind, &step.after) {
        (StepKind::RemoveSimplicial { .. } | StepKind::Smooth { .. }, StepResult::Graph(h)) => before == reg(h)?,
        (StepKind::Split { case: SplitCase::NeitherComplete, .. }, StepResult::Parts(gp, gq)) => {
            before == reg(gp)?.max(reg(gq)?)
        }
        (StepKind::Split { .. }, StepResult::Parts(gp, gq)) => {
            let part = if gp.is_complete() { gq } else { gp };
            before == reg(part)?
        }
        _ => Some(before) == step.base_value(),
    };
    Ok(relation && step.hypothesis_holds())
}

/// Chordality against linearity of the resolution of `I(Ḡ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FrobergVerdict {
    pub chordal: bool,
    pub linear: bool,
    pub consistent: bool,
}

pub fn froberg_classify(g: &Graph, field: FieldSpec) -> Result<FrobergVerdict> {
    if g.is_complete() {
        return Err(Error::ZeroIdeal);
    }
    let chordal = is_chordal(g).is_chordal();
    let linear = has_linear_resolution(&complement_edge_ideal(g), field)?;
    Ok(FrobergVerdict { chordal, linear, consistent: chordal == linear })
}
