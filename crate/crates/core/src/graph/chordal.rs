use serde::Serialize;

use super::{BitIter, Graph, VertexSet};

/// Outcome of a chordality test, with a checkable certificate either way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Chordality {
    /// Each vertex is simplicial in the subgraph induced by itself and the
    /// vertices after it.
    PerfectEliminationOrdering(Vec<usize>),
    /// An induced cycle of length at least 4, in cyclic order.
    ChordlessCycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::PerfectEliminationOrdering(_))
    }
}

/// Maximum cardinality search. Returns vertices in visiting order; ties go to
/// the smallest label.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut unvisited = g.vertices().bits();
    let mut order = Vec::with_capacity(n);
    while unvisited != 0 {
        let v = BitIter(unvisited).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        order.push(v);
        unvisited &= !(1 << (v - 1));
        for u in BitIter(g.adj_bits(v) & unvisited) {
            weight[u] += 1;
        }
    }
    order
}

/// Whether each vertex of `order` is simplicial among the vertices after it.
pub(crate) fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices().bits();
    order.iter().all(|&v| {
        later &= !(1 << (v - 1));
        g.is_clique(VertexSet(g.adj_bits(v) & later))
    })
}

/// Decide chordality. A perfect elimination ordering is the reversed MCS
/// order; when it fails, a chordless cycle is extracted separately.
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    if is_perfect_elimination_ordering(g, &order) {
        Chordality::PerfectEliminationOrdering(order)
    } else {
        Chordality::ChordlessCycle(
            find_chordless_cycle(g).expect("an MCS ordering that is not a PEO implies a chordless cycle"),
        )
    }
}

/// Search for an induced cycle of length >= 4.
///
/// For every vertex `v` and nonadjacent neighbours `x < y`, a shortest
/// `x`-`y` path avoiding the rest of `N[v]` closes an induced cycle through `v`.
pub(crate) fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 1..=g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).iter().collect();
        for (k, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[k + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let closed = g.adj_bits(v) | 1 << (v - 1);
                let allowed = (g.vertices().bits() & !closed) | 1 << (x - 1) | 1 << (y - 1);
                if let Some(path) = shortest_path(g, x, y, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: u64) -> Option<Vec<usize>> {
    let mut parent = vec![0usize; g.n() + 1];
    let mut seen = 1u64 << (from - 1);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in BitIter(g.adj_bits(u) & allowed & !seen) {
            seen |= 1 << (w - 1);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}
