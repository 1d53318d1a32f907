//! Squarefree monomial ideals in `K[x_1, ..., x_n]`.
//!
//! A squarefree monomial is identified with its support, a subset of
//! `1..=n`. An ideal is stored by its minimal generating set, which is an
//! antichain of supports. The zero ideal has no generators; the unit ideal
//! (a generator with empty support) cannot be constructed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{low_bits, BitIter, Graph, VertexSet};
use crate::homology::SimplicialComplex;

/// Largest supported number of variables.
pub const MAX_VARIABLES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<u64>,
}

/// JSON form `{"n": int, "gens": [[int]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<usize>>,
}

impl SquarefreeIdeal {
    /// Ideal generated by the given supports, reduced to its minimal generators.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, gens: I) -> Result<Self> {
        minimalize(gens, n)
    }

    pub fn zero(n: usize) -> Self {
        SquarefreeIdeal { n, gens: Vec::new() }
    }

    /// The prime `P_F = (x_i : i ∈ F)`.
    pub fn prime(n: usize, support: VertexSet) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        SquarefreeIdeal::new(n, support.iter().map(|v| VertexSet::from_vertices([v])))
    }

    /// Principal ideal of one squarefree monomial.
    pub fn principal(n: usize, support: VertexSet) -> Result<Self> {
        SquarefreeIdeal::new(n, [support])
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.gens.iter().map(|&g| VertexSet::from_bits(g))
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Membership of a squarefree monomial.
    pub fn contains(&self, monomial: VertexSet) -> bool {
        self.gens.iter().any(|&g| g & !monomial.bits() == 0)
    }

    fn nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    /// Minimal degree of a minimal generator.
    pub fn indeg(&self) -> Result<usize> {
        self.nonzero()?;
        Ok(self.gens.iter().map(|g| g.count_ones() as usize).min().unwrap())
    }

    /// `Some(d)` when every minimal generator has degree `d`.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.count_ones();
        self.gens.iter().all(|g| g.count_ones() == d).then_some(d as usize)
    }

    /// Alexander dual: generated by the minimal transversals of the supports.
    ///
    /// Built one generator at a time (Berge's method): transversals of the
    /// first `k` supports are extended to hit support `k + 1`, then minimalized.
    pub fn alexander_dual(&self) -> Result<Self> {
        self.nonzero()?;
        let mut transversals = vec![0u64];
        for &g in &self.gens {
            let mut next = Vec::with_capacity(transversals.len() * 2);
            for &t in &transversals {
                if t & g != 0 {
                    next.push(t);
                } else {
                    next.extend(BitIter(g).map(|v| t | 1 << (v - 1)));
                }
            }
            transversals = minimal_elements(next);
        }
        Ok(SquarefreeIdeal { n: self.n, gens: sorted(transversals) })
    }

    /// Height of the ideal: smallest support of a minimal prime.
    pub fn height(&self) -> Result<usize> {
        self.alexander_dual()?.indeg()
    }

    /// `dim S/I = n - height(I)`.
    pub fn krull_dim_quotient(&self) -> Result<usize> {
        Ok(self.n - self.height()?)
    }

    /// Stanley–Reisner complex: faces are supports containing no generator.
    /// Its facets are the complements of the minimal transversals.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        let dual = self.alexander_dual()?;
        let all = low_bits(self.n);
        Ok(SimplicialComplex::from_faces(
            self.n,
            dual.gens.iter().map(|&t| VertexSet::from_bits(all & !t)),
        ))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        let n = self.n.max(other.n);
        SquarefreeIdeal::new(n, self.generators().chain(other.generators()))
    }

    /// Intersection; generated by pairwise least common multiples.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        let n = self.n.max(other.n);
        let lcms = self.gens.iter().flat_map(|&a| other.gens.iter().map(move |&b| VertexSet::from_bits(a | b)));
        SquarefreeIdeal::new(n, lcms)
    }

    /// `m · I` for a squarefree monomial `m` sharing no variable with `I`.
    pub fn multiply(&self, m: VertexSet) -> Result<Self> {
        if self.gens.iter().any(|&g| g & m.bits() != 0) {
            return Err(Error::Precondition(format!("monomial {m} shares variables with the ideal")));
        }
        SquarefreeIdeal::new(self.n.max(m.max_vertex().unwrap_or(0)), self.generators().map(|g| g.union(m)))
    }

    /// Same generators in a polynomial ring with `n >= ambient_n` variables.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        SquarefreeIdeal::new(n, self.generators())
    }

    /// Rename variable `v` to `map[v - 1]` in a ring with `n` variables.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Result<Self> {
        if map.len() < self.n {
            return Err(Error::Precondition("relabelling map shorter than ambient ring".into()));
        }
        SquarefreeIdeal::new(n, self.generators().map(|g| g.iter().map(|v| map[v - 1]).collect()))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { n: self.n, gens: self.generators().map(|g| g.iter().collect()).collect() }
    }

    pub fn from_json(j: &IdealJson) -> Result<Self> {
        let gens: Vec<VertexSet> = j
            .gens
            .iter()
            .map(|g| {
                if let Some(&bad) = g.iter().find(|&&v| v == 0 || v > j.n) {
                    Err(Error::VertexOutOfRange { vertex: bad, n: j.n })
                } else {
                    Ok(g.iter().copied().collect())
                }
            })
            .collect::<Result<_>>()?;
        SquarefreeIdeal::new(j.n, gens)
    }

    /// One generator per line, variables separated by spaces, preceded by an
    /// `n=<k>` header line.
    pub fn to_lines(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for g in self.generators() {
            let vars: Vec<String> = g.iter().map(|v| v.to_string()).collect();
            out.push_str(&vars.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Edge ideal `I(G) = (x_i x_j : {i, j} ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> SquarefreeIdeal {
    let gens = g.edges().map(|(u, v)| (1u64 << (u - 1)) | (1u64 << (v - 1))).collect();
    SquarefreeIdeal { n: g.n(), gens: sorted(gens) }
}

/// Edge ideal of the complement graph, `I(Ḡ)`.
pub fn complement_edge_ideal(g: &Graph) -> SquarefreeIdeal {
    edge_ideal(&g.complement())
}

/// Drop every support that strictly contains another.
pub fn minimalize<I: IntoIterator<Item = VertexSet>>(gens: I, n: usize) -> Result<SquarefreeIdeal> {
    if n > MAX_VARIABLES {
        return Err(Error::TooManyVariables { n, limit: MAX_VARIABLES });
    }
    let mut raw = Vec::new();
    for g in gens {
        if g.is_empty() {
            return Err(Error::EmptySupport);
        }
        if let Some(m) = g.max_vertex().filter(|&m| m > n) {
            return Err(Error::VertexOutOfRange { vertex: m, n });
        }
        raw.push(g.bits());
    }
    Ok(SquarefreeIdeal { n, gens: sorted(minimal_elements(raw)) })
}

fn minimal_elements(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.generators().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            for v in g.iter() {
                write!(f, "x{v}")?;
            }
        }
        f.write_str(")")
    }
}

/// Parse an ideal from JSON (`{"n":..,"gens":..}`), a monomial list such as
/// `(x1x2, x2x3)`, or one generator per line as space-separated indices with
/// an optional `n=<k>` header. `ambient` overrides or supplies `n`; otherwise
/// the largest variable index is used.
pub fn parse_ideal(text: &str, ambient: Option<usize>) -> Result<SquarefreeIdeal> {
    let t = text.trim();
    if t.starts_with('{') {
        let j: IdealJson = serde_json::from_str(t).map_err(|e| Error::ParseLine { line: e.line(), message: e.to_string() })?;
        let parsed = SquarefreeIdeal::from_json(&j)?;
        return match ambient {
            Some(n) => parsed.with_ambient(n),
            None => Ok(parsed),
        };
    }
    let (header_n, gens) = if t.starts_with('(') { parse_monomials(t)? } else { parse_lines(t)? };
    let max_var = gens.iter().filter_map(|g: &VertexSet| g.max_vertex()).max().unwrap_or(0);
    let n = ambient.or(header_n).unwrap_or(max_var);
    SquarefreeIdeal::new(n, gens)
}

fn parse_monomials(t: &str) -> Result<(Option<usize>, Vec<VertexSet>)> {
    let err = |message: String| Error::ParseLine { line: 1, message };
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| err("unbalanced parentheses".into()))?
        .trim();
    if inner.is_empty() || inner == "0" {
        return Ok((None, Vec::new()));
    }
    let mut gens = Vec::new();
    for term in inner.split(',') {
        let term = term.trim();
        if term == "1" {
            return Err(Error::UnitIdeal);
        }
        if term.contains('^') {
            return Err(err(format!("not squarefree: {term:?}")));
        }
        let mut vars = VertexSet::EMPTY;
        let mut chars = term.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                'x' => {
                    if chars.peek() == Some(&'_') {
                        chars.next();
                    }
                    let mut digits = String::new();
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        digits.push(*d);
                        chars.next();
                    }
                    let v: usize = digits.parse().map_err(|_| err(format!("variable without index in {term:?}")))?;
                    if !(1..=MAX_VARIABLES).contains(&v) {
                        return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VARIABLES });
                    }
                    if vars.contains(v) {
                        return Err(err(format!("not squarefree: {term:?}")));
                    }
                    vars.insert(v);
                }
                '*' | ' ' => {}
                other => return Err(err(format!("unexpected {other:?} in {term:?}"))),
            }
        }
        if vars.is_empty() {
            return Err(err(format!("empty monomial in {t:?}")));
        }
        gens.push(vars);
    }
    Ok((None, gens))
}

fn parse_lines(t: &str) -> Result<(Option<usize>, Vec<VertexSet>)> {
    let mut header = None;
    let mut gens = Vec::new();
    for (k, raw) in t.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=").or_else(|| line.strip_prefix("n =")) {
            let n = rest.trim().parse().map_err(|_| Error::ParseLine { line: k + 1, message: format!("bad header {line:?}") })?;
            header = Some(n);
            continue;
        }
        let mut g = VertexSet::EMPTY;
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::ParseLine { line: k + 1, message: format!("not a variable index: {tok:?}") })?;
            if !(1..=MAX_VARIABLES).contains(&v) {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VARIABLES });
            }
            g.insert(v);
        }
        gens.push(g);
    }
    Ok((header, gens))
}
