use serde::Serialize;

use super::{BitIter, Graph, VertexSet};

pub const DEFAULT_SEPARATOR_CAP: usize = 3;

/// Proper vertex subsets `P`, `Q` covering `V(G)` such that `P ∩ Q` is a
/// clique and there are no edges between `P \ Q` and `Q \ P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub p: VertexSet,
    pub q: VertexSet,
}

impl Decomposition {
    pub fn separator(&self) -> VertexSet {
        self.p.intersection(self.q)
    }

    /// Check both defining conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let all = g.vertices();
        let (p, q) = (self.p, self.q);
        let proper = p != all && q != all && p.is_subset(all) && q.is_subset(all);
        let covers = p.union(q) == all;
        let clique = g.is_clique(p.intersection(q));
        let p_only = p.difference(q);
        let q_only = q.difference(p);
        let no_cross = p_only.iter().all(|v| g.neighbors(v).intersection(q_only).is_empty());
        proper && covers && clique && no_cross
    }
}

/// Search for a decomposition along a clique separator.
///
/// Candidates are tried in order: the empty separator (disconnected graph),
/// cut vertices, then cliques of size `2..=cap`. `P` is the separator plus the
/// component of `G - S` holding its smallest vertex; `Q` is everything else
/// plus the separator.
pub fn find_decomposition(g: &Graph, cap: usize) -> Option<Decomposition> {
    let all = g.vertices();
    try_separator(g, VertexSet::EMPTY)
        .or_else(|| (1..=g.n()).find_map(|v| try_separator(g, VertexSet::from_vertices([v]))))
        .or_else(|| {
            let mut found = None;
            for size in 2..=cap.min(g.n().saturating_sub(2)) {
                for_each_clique(g, size, all.bits(), 0, &mut |s| {
                    found = try_separator(g, VertexSet(s));
                    found.is_some()
                });
                if found.is_some() {
                    break;
                }
            }
            found
        })
}

fn try_separator(g: &Graph, sep: VertexSet) -> Option<Decomposition> {
    let rest = g.vertices().difference(sep);
    let start = rest.min_vertex()?;
    let comp = g.component_of(start, rest);
    if comp == rest {
        return None;
    }
    Some(Decomposition { p: comp.union(sep), q: g.vertices().difference(comp) })
}

/// Enumerate cliques of exactly `size` vertices in increasing label order,
/// stopping early when `visit` returns true.
fn for_each_clique(g: &Graph, size: usize, candidates: u64, chosen: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
    if size == 0 {
        return visit(chosen);
    }
    for v in BitIter(candidates) {
        let later = candidates & !super::low_bits(v);
        if (later & g.adj_bits(v)).count_ones() as usize + 1 < size {
            continue;
        }
        if for_each_clique(g, size - 1, later & g.adj_bits(v), chosen | 1 << (v - 1), visit) {
            return true;
        }
    }
    false
}
