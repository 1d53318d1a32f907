//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so graphs are limited to
//! [`MAX_VERTICES`] vertices (the graph6 single-byte size range).

mod chordal;
mod format;
mod separator;
pub(crate) mod smoothing;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use chordal::{is_chordal, maximum_cardinality_search, Chordality};
pub use format::{parse_edge_list, parse_graph6};
pub use separator::{find_decomposition, Decomposition, DEFAULT_SEPARATOR_CAP};
pub use smoothing::{find_smoothable_vertex, is_cycle_graph, smooth, subdivide, Smoothable};

pub const MAX_VERTICES: usize = 62;

/// A subset of `1..=64`, stored as a bitmask (vertex `v` is bit `v - 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!((1..=64).contains(&v), "vertex {v} outside 1..=64");
            bits |= 1 << (v - 1);
        }
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << (v - 1));
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Smallest member, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = vs.iter().find(|&&v| !(1..=64).contains(&v)) {
            return Err(serde::de::Error::custom(format!("vertex {bad} outside 1..=64")));
        }
        Ok(VertexSet::from_vertices(vs))
    }
}

/// Iterator over the set bits of a mask, yielding 1-based positions.
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(t + 1)
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// The cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (1..=n).map(|v| (v, v % n + 1)))
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v, v + 1)))
    }

    /// Petersen graph: outer 5-cycle on `1..=5`, inner pentagram on `6..=10`,
    /// spokes `i - (i + 5)`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 1..=5 {
            edges.push((i, i % 5 + 1));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 1) % 5 + 6));
        }
        Graph::from_edges(10, edges).expect("static edge list")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.n).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u - 1] &= !(1 << (v - 1));
        self.adj[v - 1] &= !(1 << (u - 1));
    }

    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v) && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |u| {
            BitIter(self.adj[u - 1] & !low_bits(u)).map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Whether the vertices of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::from_vertices([v])).is_subset(self.neighbors(v)))
    }

    pub fn complement(&self) -> Graph {
        let all = low_bits(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &a)| !a & all & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `w`, relabelled to `1..=|w|` in increasing order of `w`.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(m) = w.max_vertex() {
            self.check_vertex(m)?;
        }
        let members: Vec<usize> = w.iter().collect();
        let mut g = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i + 1, j + 1);
                }
            }
        }
        Ok(g)
    }

    /// `G \ v`, relabelled order-preservingly. Requires `n >= 2`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().difference(VertexSet::from_vertices([v])))
    }

    /// Relabel by `perm`, where `perm[v - 1]` is the new label of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().filter(|&p| (1..=self.n).contains(&p)).collect();
        if image != self.vertices() {
            return Err(Error::Precondition("not a permutation of 1..=n".into()));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])))
    }

    pub fn is_simplicial(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.is_clique(self.neighbors(v)))
    }

    /// Connected component containing `v`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << (v - 1);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in BitIter(frontier) {
                next |= self.adj[u - 1];
            }
            next &= within.bits() & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(1, self.vertices()) == self.vertices()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
