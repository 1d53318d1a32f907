//! Homological invariants of squarefree monomial ideals, with a focus on the
//! edge ideal `I(Ḡ)` of the complement of a simple graph `G`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple graphs on `1..=n`, graph6 / edge-list I/O, chordality,
//!   simplicial vertices, smoothing of subdivided edges, clique separators.
//! * [`ideal`]: squarefree monomial ideals, Alexander duality, Stanley–Reisner
//!   complexes.
//! * [`homology`]: simplicial complexes and exact reduced homology.
//! * [`betti`]: graded Betti tables through Hochster's formula and the
//!   invariants derived from them (regularity, projective dimension, depth).
//! * [`reduction`]: regularity-preserving graph reductions with certified
//!   traces and an oracle fallback.
//! * [`suites`]: seeded and exhaustive verification harnesses.

pub mod betti;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
mod linalg;
pub mod random;
pub mod reduction;
pub mod suites;

pub use betti::{betti_table, BettiTable, InvariantReport};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use homology::{FieldSpec, HomologyProfile, SimplicialComplex};
pub use ideal::SquarefreeIdeal;
pub use reduction::{regularity_via_reduction, ReductionOptions, ReductionStep, ReductionTrace};

