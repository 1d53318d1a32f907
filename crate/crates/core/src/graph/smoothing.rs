use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// A degree-2 vertex `w` whose removal (replacing the path `a - w - b` by the
/// edge `a - b`) undoes an edge subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Smoothable {
    pub w: usize,
    pub a: usize,
    pub b: usize,
}

impl Smoothable {
    /// Labels of `a` and `b` after `w` has been deleted.
    pub fn relabelled_ends(&self) -> (usize, usize) {
        let shift = |x: usize| if x > self.w { x - 1 } else { x };
        (shift(self.a), shift(self.b))
    }
}

pub(crate) fn smoothable_at(g: &Graph, w: usize) -> Option<Smoothable> {
    if g.degree(w) != 2 {
        return None;
    }
    let mut ends = g.neighbors(w).iter();
    let (a, b) = (ends.next()?, ends.next()?);
    if g.has_edge(a, b) {
        return None;
    }
    let common = g.neighbors(a).intersection(g.neighbors(b)).difference(VertexSet::from_vertices([w]));
    common.is_empty().then_some(Smoothable { w, a, b })
}

/// First vertex (by label) that can be smoothed: degree 2, nonadjacent
/// neighbours `a < b`, and no other vertex adjacent to both `a` and `b`.
pub fn find_smoothable_vertex(g: &Graph) -> Option<Smoothable> {
    (1..=g.n()).find_map(|w| smoothable_at(g, w))
}

/// Delete `w` and join its two neighbours. Vertices above `w` shift down by one.
pub fn smooth(g: &Graph, w: usize) -> Result<Graph> {
    g.check_vertex(w)?;
    let s = smoothable_at(g, w)
        .ok_or_else(|| Error::Precondition(format!("vertex {w} is not smoothable")))?;
    let mut h = g.remove_vertex(w)?;
    let (a, b) = s.relabelled_ends();
    h.add_edge(a, b);
    Ok(h)
}

/// Subdivide the edge `{a, b}`: remove it and add a new vertex `n + 1`
/// adjacent to both ends.
pub fn subdivide(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    if !g.has_edge(a, b) {
        return Err(Error::Precondition(format!("{{{a},{b}}} is not an edge")));
    }
    let mut h = Graph::from_edges(g.n() + 1, g.edges())?;
    h.remove_edge(a, b);
    h.add_edge(a, g.n() + 1);
    h.add_edge(b, g.n() + 1);
    Ok(h)
}

/// `Some(n)` iff `g` is a single cycle on all of its `n >= 3` vertices.
pub fn is_cycle_graph(g: &Graph) -> Option<usize> {
    let n = g.n();
    (n >= 3 && (1..=n).all(|v| g.degree(v) == 2) && g.is_connected()).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycles_are_smoothable() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(find_smoothable_vertex(&c5), Some(Smoothable { w: 1, a: 2, b: 5 }));
        assert_eq!(smooth(&c5, 1).unwrap(), Graph::cycle(4).unwrap());
        assert_eq!(is_cycle_graph(&smooth(&Graph::cycle(6).unwrap(), 1).unwrap()), Some(5));
        assert_eq!(find_smoothable_vertex(&Graph::cycle(3).unwrap()), None);
        assert_eq!(find_smoothable_vertex(&Graph::cycle(4).unwrap()), None);
    }

    #[test]
    fn short_path_smooths_to_k2() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(smooth(&p3, 2).unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn subdivided_k4_is_rejected() {
        let k4 = Graph::complete(4).unwrap();
        let g = subdivide(&k4, 1, 2).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.has_edge(1, 5) && g.has_edge(2, 5) && !g.has_edge(1, 2));
        assert_eq!(find_smoothable_vertex(&g), None);
        assert!(matches!(smooth(&g, 5), Err(Error::Precondition(_))));
    }

    #[test]
    fn cycle_graph_recognition() {
        assert_eq!(is_cycle_graph(&Graph::cycle(7).unwrap()), Some(7));
        assert_eq!(is_cycle_graph(&Graph::complete(4).unwrap()), None);
        let two_triangles = Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(is_cycle_graph(&two_triangles), None);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (3usize..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        // Smoothing followed by subdivision of the new edge gives back the
        // original graph once `w` is moved to the end of the labelling.
        #[test]
        fn smooth_then_subdivide_recovers_graph(g in arb_graph(9)) {
            for w in 1..=g.n() {
                if let Some(s) = smoothable_at(&g, w) {
                    let h = smooth(&g, w).unwrap();
                    let (a, b) = s.relabelled_ends();
                    let back = subdivide(&h, a, b).unwrap();
                    let perm: Vec<usize> = (1..=g.n())
                        .map(|v| if v == w { g.n() } else if v > w { v - 1 } else { v })
                        .collect();
                    prop_assert_eq!(g.relabel(&perm).unwrap(), back);
                }
            }
        }
    }
}
