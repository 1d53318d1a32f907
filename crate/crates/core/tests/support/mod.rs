//! Reference implementations used to cross-check the library. Each one is
//! deliberately naive and shares no code with the crate under test.

#![allow(dead_code)]

use std::collections::BTreeMap;

use edgereg::{Graph, SquarefreeIdeal, VertexSet};

/// Chordality by repeatedly deleting any simplicial vertex.
pub fn dirac_chordal(g: &Graph) -> bool {
    let mut alive: Vec<usize> = (1..=g.n()).collect();
    loop {
        if alive.is_empty() {
            return true;
        }
        let simplicial = alive.iter().position(|&v| {
            let nbrs: Vec<usize> = alive.iter().copied().filter(|&u| u != v && g.has_edge(u, v)).collect();
            nbrs.iter().enumerate().all(|(k, &a)| nbrs[k + 1..].iter().all(|&b| g.has_edge(a, b)))
        });
        match simplicial {
            Some(k) => {
                alive.remove(k);
            }
            None => return false,
        }
    }
}

fn components(g: &Graph, w: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..w.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if g.has_edge(w[a], w[b]) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    (0..w.len()).filter(|&x| find(&mut parent, x) == x).count()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    let n = g.n();
    (1..=n).all(|a| (a + 1..=n).all(|b| (b + 1..=n).all(|c| !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))))
}

/// Betti table of `I(Ḡ)` for a triangle-free `G`. The clique complex of `G` is
/// `G` itself, so each induced subcomplex is a graph with `H̃_0 = c - 1` and
/// `H̃_1 = m - |W| + c`.
pub fn triangle_free_betti(g: &Graph) -> BTreeMap<(usize, usize), u64> {
    assert!(is_triangle_free(g));
    let n = g.n();
    let mut table = BTreeMap::new();
    for mask in 1u64..1 << n {
        let w: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let j = w.len();
        let c = components(g, &w);
        let m = w.iter().enumerate().map(|(k, &a)| w[k + 1..].iter().filter(|&&b| g.has_edge(a, b)).count()).sum::<usize>();
        let h0 = c - 1;
        let h1 = m + c - j;
        if h0 > 0 && j >= 2 {
            *table.entry((j - 2, j)).or_insert(0) += h0 as u64;
        }
        if h1 > 0 && j >= 3 {
            *table.entry((j - 3, j)).or_insert(0) += h1 as u64;
        }
    }
    table
}

pub fn regularity_of(table: &BTreeMap<(usize, usize), u64>) -> usize {
    table.keys().map(|&(i, j)| j - i).max().expect("nonzero ideal")
}

/// Minimal transversals of the generator supports, found by scanning every subset.
pub fn brute_force_dual(ideal: &SquarefreeIdeal) -> Vec<u64> {
    let n = ideal.ambient_n();
    let gens: Vec<u64> = ideal.generators().map(VertexSet::bits).collect();
    let hits = |t: u64| gens.iter().all(|&g| g & t != 0);
    let mut out: Vec<u64> = (0u64..1 << n)
        .filter(|&t| hits(t) && (0..n).all(|v| t >> v & 1 == 0 || !hits(t & !(1 << v))))
        .collect();
    out.sort_unstable();
    out
}

pub fn generator_bits(ideal: &SquarefreeIdeal) -> Vec<u64> {
    let mut out: Vec<u64> = ideal.generators().map(VertexSet::bits).collect();
    out.sort_unstable();
    out
}
