//! Finite simplicial complexes and their reduced homology over `Q` or `GF(p)`.
//!
//! Complexes are stored by facets. Faces of a given dimension are generated on
//! demand from the facets, so memory stays proportional to one chain group.
//! The reduced chain complex includes `C_{-1} = K·∅` with the augmentation map
//! as `∂_0`; the empty complex `{∅}` therefore has `H̃_{-1} = K`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};
use crate::linalg;

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::PrimeField(2);

    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub(crate) fn rank(self, rows: &[Vec<i64>]) -> usize {
        match self {
            FieldSpec::Rationals => linalg::rank_rational(rows),
            FieldSpec::PrimeField(p) => linalg::rank_mod_p(rows, p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `Q`, `gf:<p>` and `GF(<p>)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let lower = t.to_ascii_lowercase();
        let digits = lower
            .strip_prefix("gf:")
            .or_else(|| lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::InvalidField(format!("unrecognised field {s:?}")))?;
        let p = digits.parse::<u64>().map_err(|_| Error::InvalidField(format!("bad characteristic in {s:?}")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Abstract simplicial complex on `1..=n`, given by its facets.
///
/// The void complex has no faces at all; the empty complex has the single
/// face `∅`. The two are distinct.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Complex generated by `faces`; non-maximal inputs are discarded.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Self {
        let raw: Vec<u64> = faces.into_iter().map(VertexSet::bits).collect();
        SimplicialComplex { n, facets: maximal_elements(raw) }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![0] }
    }

    /// Full simplex on `1..=n`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VertexSet::full(n).bits()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets.iter().map(|&f| VertexSet::from_bits(f))
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.bits() & !f == 0)
    }

    /// Faces of dimension `k` (size `k + 1`), sorted by bitmask.
    pub fn faces(&self, k: isize) -> Vec<VertexSet> {
        if k < -1 {
            return Vec::new();
        }
        faces_of_size(&self.facets, (k + 1) as usize).into_iter().map(VertexSet::from_bits).collect()
    }

    /// `f_{-1}, f_0, ..., f_d`.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dimension() {
            None => Vec::new(),
            Some(d) => (0..=(d + 1) as usize).map(|s| faces_of_size(&self.facets, s).len()).collect(),
        }
    }

    /// Induced subcomplex on `w`, relabelled to `1..=|w|`.
    pub fn restrict(&self, w: VertexSet) -> SimplicialComplex {
        let w = w.intersection(VertexSet::full(self.n));
        let faces = self.facets.iter().map(|&f| VertexSet::from_bits(compress(f & w.bits(), w.bits())));
        SimplicialComplex::from_faces(w.len(), faces)
    }

    /// Integer matrix of `∂_k : C_k → C_{k-1}`, rows indexed by `faces(k-1)`,
    /// columns by `faces(k)`.
    pub fn boundary_matrix(&self, k: isize) -> Vec<Vec<i64>> {
        if k < 0 {
            return Vec::new();
        }
        let rows = faces_of_size(&self.facets, k as usize);
        let cols = faces_of_size(&self.facets, k as usize + 1);
        boundary(&rows, &cols)
    }
}

/// Maximal clique complex of `g` (its flag complex); faces are the cliques.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let mut facets = Vec::new();
    bron_kerbosch(g, 0, g.vertices().bits(), 0, &mut facets);
    facets.sort_unstable();
    SimplicialComplex { n: g.n(), facets }
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = BitIter(p | x).max_by_key(|&u| (g.adj_bits(u) & p).count_ones()).unwrap();
    for v in BitIter(p & !g.adj_bits(pivot)) {
        let nv = g.adj_bits(v);
        bron_kerbosch(g, r | 1 << (v - 1), p & nv, x & nv, out);
        p &= !(1 << (v - 1));
        x |= 1 << (v - 1);
    }
}

/// Dimensions of reduced homology, indexed from `k = -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H̃_k`, zero outside the stored range.
    pub fn get(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// `(k, dim H̃_k)` for every nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, &d)| (i as isize - 1, d))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Highest stored degree (the complex dimension), `None` if void.
    pub fn top_degree(&self) -> Option<isize> {
        (!self.dims.is_empty()).then(|| self.dims.len() as isize - 2)
    }
}

pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    homology_of_generated(&complex.facets, field)
}

/// Reduced homology of the complex generated by `gens` (not necessarily an
/// antichain).
pub(crate) fn homology_of_generated(gens: &[u64], field: FieldSpec) -> HomologyProfile {
    let Some(top) = gens.iter().map(|g| g.count_ones() as usize).max() else {
        return HomologyProfile::default();
    };
    // chains[s] = faces with s vertices = C_{s-1}
    let chains: Vec<Vec<u64>> = (0..=top).map(|s| faces_of_size(gens, s)).collect();
    // ranks[s] = rank of ∂ : C_{s-1} -> C_{s-2}; ranks[0] = 0 and ranks[top + 1] = 0
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        ranks[s] = boundary_rank(&chains[s - 1], &chains[s], field);
    }
    let dims = (0..=top).map(|s| chains[s].len() - ranks[s] - ranks[s + 1]).collect();
    HomologyProfile { dims }
}

fn boundary_rank(rows: &[u64], cols: &[u64], field: FieldSpec) -> usize {
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    if rows.len() == 1 && rows[0] == 0 {
        // augmentation
        return 1;
    }
    field.rank(&boundary(rows, cols))
}

fn boundary(rows: &[u64], cols: &[u64]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (c, &sigma) in cols.iter().enumerate() {
        for (i, v) in BitIter(sigma).enumerate() {
            let facet = sigma & !(1 << (v - 1));
            let r = rows.binary_search(&facet).expect("boundary face present");
            m[r][c] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// All distinct subsets of size `s` of some generator, sorted.
pub(crate) fn faces_of_size(gens: &[u64], s: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for &g in gens {
        let bits: Vec<u32> = {
            let mut b = Vec::with_capacity(g.count_ones() as usize);
            let mut m = g;
            while m != 0 {
                b.push(m.trailing_zeros());
                m &= m - 1;
            }
            b
        };
        let len = bits.len();
        debug_assert!(len < 64);
        if s > len {
            continue;
        }
        if s == 0 {
            out.push(0);
            continue;
        }
        // Gosper's hack over index combinations
        let mut c: u64 = (1 << s) - 1;
        let limit: u64 = 1 << len;
        while c < limit {
            let mut face = 0u64;
            let mut m = c;
            while m != 0 {
                face |= 1 << bits[m.trailing_zeros() as usize];
                m &= m - 1;
            }
            out.push(face);
            let lo = c & c.wrapping_neg();
            let hi = c + lo;
            c = (((c ^ hi) >> 2) / lo) | hi;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) fn maximal_elements(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Pack the bits of `x` selected by `mask` into the low bits.
fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (k, v) in BitIter(mask).enumerate() {
        if x >> (v - 1) & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn square() -> SimplicialComplex {
        clique_complex(&Graph::cycle(4).unwrap())
    }

    fn rp2() -> SimplicialComplex {
        let tris = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
        ];
        SimplicialComplex::from_faces(6, tris.iter().map(|t| vs(t)))
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf:2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("GF(32003)".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(32003));
        assert!("gf:4".parse::<FieldSpec>().is_err());
        assert!("gf:2147483659".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeField(7).to_string(), "GF(7)");
    }

    #[test]
    fn clique_complexes() {
        let sq = square();
        assert_eq!(sq.facets().collect::<Vec<_>>(), vec![vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 4]), vs(&[3, 4])]);
        assert_eq!(clique_complex(&Graph::complete(3).unwrap()).facets().collect::<Vec<_>>(), vec![vs(&[1, 2, 3])]);
        let points = clique_complex(&Graph::empty(3).unwrap());
        assert_eq!(points.facets().count(), 3);
        assert_eq!(points.dimension(), Some(0));
    }

    #[test]
    fn restriction() {
        let sq = square();
        let two_points = sq.restrict(vs(&[1, 3]));
        assert_eq!(two_points, SimplicialComplex::from_faces(2, [vs(&[1]), vs(&[2])]));
        assert_eq!(sq.restrict(VertexSet::full(4)), sq);
        let tri = SimplicialComplex::simplex(3);
        assert_eq!(tri.restrict(vs(&[1, 2])), SimplicialComplex::simplex(2));
        assert_eq!(sq.restrict(VertexSet::EMPTY), SimplicialComplex::empty(0));
        assert_eq!(SimplicialComplex::void(3).restrict(vs(&[1])), SimplicialComplex::void(1));
    }

    #[test]
    fn homology_examples() {
        let h = reduced_homology(&square(), FieldSpec::Rationals);
        assert_eq!((h.get(-1), h.get(0), h.get(1)), (0, 0, 1));
        let pts = SimplicialComplex::from_faces(2, [vs(&[1]), vs(&[2])]);
        assert_eq!(reduced_homology(&pts, FieldSpec::Rationals).get(0), 1);
        let e = reduced_homology(&SimplicialComplex::empty(3), FieldSpec::Rationals);
        assert_eq!(e.get(-1), 1);
        assert!(reduced_homology(&SimplicialComplex::void(3), FieldSpec::Rationals).is_acyclic());
        assert!(reduced_homology(&SimplicialComplex::simplex(4), FieldSpec::GF2).is_acyclic());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        let c = rp2();
        assert_eq!(c.f_vector(), vec![1, 6, 15, 10]);
        let q = reduced_homology(&c, FieldSpec::Rationals);
        let f2 = reduced_homology(&c, FieldSpec::GF2);
        let f3 = reduced_homology(&c, FieldSpec::PrimeField(3));
        assert!(q.is_acyclic());
        assert_eq!((f2.get(1), f2.get(2)), (1, 1));
        assert!(f3.is_acyclic());
    }

    /// Compare ranks across fields for all complexes in a small sample and
    /// report torsion-induced disagreements instead of asserting equality.
    #[test]
    fn field_comparison_report() {
        let mut disagreements = Vec::new();
        let mut samples: Vec<SimplicialComplex> = vec![rp2(), square()];
        for mask in (0u64..1 << 20).step_by(9973) {
            let faces: Vec<VertexSet> = (0..20).filter(|k| mask >> k & 1 == 1).map(|k| {
                let tri = faces_of_size(&[0b111111], 3)[k];
                VertexSet::from_bits(tri)
            }).collect();
            samples.push(SimplicialComplex::from_faces(6, faces));
        }
        for c in &samples {
            let q = reduced_homology(c, FieldSpec::Rationals);
            for p in [2, 32003] {
                if reduced_homology(c, FieldSpec::PrimeField(p)) != q {
                    disagreements.push((c.clone(), p));
                }
            }
        }
        // RP^2 over GF(2) is the known torsion case
        assert!(disagreements.iter().any(|(c, p)| *c == rp2() && *p == 2));
        assert!(disagreements.iter().all(|(_, p)| *p == 2));
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(1u64..(1 << n), 0..8)
                .prop_map(move |fs| SimplicialComplex::from_faces(n, fs.into_iter().map(VertexSet::from_bits)))
        })
    }

    proptest! {
        #[test]
        fn euler_poincare(c in arb_complex()) {
            let f = c.f_vector();
            // f[0] counts ∅; reduced Euler characteristic
            let chi: i64 = f.iter().enumerate().map(|(s, &x)| if s % 2 == 1 { x as i64 } else { -(x as i64) }).sum();
            for field in [FieldSpec::Rationals, FieldSpec::GF2, FieldSpec::PrimeField(32003)] {
                let h = reduced_homology(&c, field);
                let alt: i64 = h.nonzero().map(|(k, d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
                prop_assert_eq!(chi, alt);
            }
        }

        #[test]
        fn cones_are_acyclic(c in arb_complex()) {
            let n = c.n() + 1;
            let apex = 1u64 << (n - 1);
            let cone = SimplicialComplex::from_faces(n, c.facets().map(|f| VertexSet::from_bits(f.bits() | apex)).chain([VertexSet::from_bits(apex)]));
            prop_assert!(reduced_homology(&cone, FieldSpec::Rationals).is_acyclic());
            prop_assert!(reduced_homology(&cone, FieldSpec::GF2).is_acyclic());
        }

        #[test]
        fn boundary_of_boundary_vanishes(c in arb_complex()) {
            let d = c.dimension().unwrap_or(-1);
            for k in 1..=d {
                let a = c.boundary_matrix(k);
                let b = c.boundary_matrix(k + 1);
                if a.is_empty() || b.is_empty() || b[0].is_empty() { continue; }
                for row in &a {
                    for col in 0..b[0].len() {
                        let s: i64 = row.iter().zip(&b).map(|(x, brow)| x * brow[col]).sum();
                        prop_assert_eq!(s, 0);
                    }
                }
            }
        }
    }
}
