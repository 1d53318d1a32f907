//! Seeded generators for randomized checks. All randomness flows through a
//! caller-supplied RNG so a `(seed, parameters)` pair replays exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::ideal::SquarefreeIdeal;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each of the `n choose 2` edges independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Random graph with a uniformly chosen edge density, rejecting complete graphs.
pub fn random_noncomplete_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Graph> {
    loop {
        let p = rng.gen_range(0.15..0.85);
        let g = random_graph(rng, n, p)?;
        if !g.is_complete() {
            return Ok(g);
        }
    }
}

/// Uniformly random permutation of `1..=n`, in the form taken by [`Graph::relabel`].
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    perm
}

pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> VertexSet {
    let mut vs: Vec<usize> = (1..=n).collect();
    vs.shuffle(rng);
    vs.into_iter().take(size).collect()
}

/// Nonzero ideal generated by `1..=max_gens` distinct random squarefree
/// monomials of degree exactly `d`.
pub fn random_equigenerated_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    d: usize,
    max_gens: usize,
) -> Result<SquarefreeIdeal> {
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens: Vec<VertexSet> = (0..k).map(|_| random_subset(rng, n, d)).collect();
    SquarefreeIdeal::new(n, gens)
}

/// Nonzero squarefree ideal with generators of mixed degrees in `1..=max_deg`.
pub fn random_squarefree_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_deg: usize,
    max_gens: usize,
) -> Result<SquarefreeIdeal> {
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens: Vec<VertexSet> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg.min(n));
            random_subset(rng, n, d)
        })
        .collect();
    SquarefreeIdeal::new(n, gens)
}

/// Two graphs glued along a common clique.
///
/// Vertices are laid out as `x = 1..=a`, `z = a+1..=a+r`, `y = a+r+1..=a+r+b`.
/// `G_1` lives on `x ∪ z`, `G_2` on `z ∪ y`, `z` is a clique in both and there
/// are no `x`–`y` edges. Both parts are non-complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedPair {
    pub glued: Graph,
    pub x: VertexSet,
    pub z: VertexSet,
    pub y: VertexSet,
}

impl GluedPair {
    pub fn overlap(&self) -> usize {
        self.z.len()
    }

    pub fn part1(&self) -> VertexSet {
        self.x.union(self.z)
    }

    pub fn part2(&self) -> VertexSet {
        self.z.union(self.y)
    }
}

/// Sample a glued pair with `|z| = r` and `1..=max_side` private vertices per side.
pub fn random_glued_pair<R: Rng + ?Sized>(rng: &mut R, r: usize, max_side: usize) -> Result<GluedPair> {
    loop {
        let a = rng.gen_range(1..=max_side);
        let b = rng.gen_range(1..=max_side);
        let n = a + r + b;
        let x = VertexSet::from_vertices(1..=a);
        let z = VertexSet::from_vertices(a + 1..=a + r);
        let y = VertexSet::from_vertices(a + r + 1..=n);
        let p = rng.gen_range(0.2..0.8);
        let mut g = Graph::empty(n)?;
        for u in 1..=n {
            for v in u + 1..=n {
                let crosses = (x.contains(u) && y.contains(v)) || (y.contains(u) && x.contains(v));
                if crosses {
                    continue;
                }
                if (z.contains(u) && z.contains(v)) || rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let pair = GluedPair { glued: g, x, z, y };
        if !pair.glued.is_clique(pair.part1()) && !pair.glued.is_clique(pair.part2()) {
            return Ok(pair);
        }
    }
}
