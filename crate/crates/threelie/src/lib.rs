//! Exact-arithmetic toolkit for finite-dimensional 3-Lie algebras over the
//! rationals.
//!
//! A 3-Lie algebra is a vector space with a totally skew-symmetric trilinear
//! bracket satisfying the ternary Jacobi (fundamental) identity. This crate
//! provides:
//!
//! - exact rational linear algebra ([`linalg`]): rank, kernel, and solving
//!   with fraction-free elimination, no floating point anywhere;
//! - the algebra data model ([`algebra`]): structure constants, bracket
//!   evaluation, fundamental-identity and Leibniz-rule checkers, the circle
//!   operation on the fundamental set, and the adjoint representation;
//! - representations ([`representation`]): the (R1)/(R2) conditions, the
//!   induced left/right actions on `Hom(g, V)`, and the Leibniz-module
//!   axioms;
//! - the cochain complex ([`cochain`]): a generic coboundary operator,
//!   0-/1-cocycle tests, and exact computation of Z1, B1, and H1;
//! - deformations ([`deformation`]): infinitesimal-deformation verdicts and
//!   the full Nijenhuis-operator suite (twisted brackets, powers,
//!   compatibility, polynomial closure);
//! - abelian extensions ([`extension`]): building `g ⊕ V` from a cocycle,
//!   recovering the representation and cocycle from a section, deciding
//!   equivalence, and classifying extensions by H1;
//! - a JSON file format ([`io`]) and a batch CLI ([`cli`]) over all of it.
//!
//! Every check is exact: identities hold or fail with zero tolerance, and
//! violation reports carry the offending basis tuples together with the
//! nonzero defect vectors.

pub mod algebra;
pub mod basis;
pub mod cli;
pub mod cochain;
pub mod deformation;
pub mod extension;
pub mod io;
pub mod linalg;
pub mod report;
pub mod representation;

pub use algebra::{PairElement, SkewTrilinear, ThreeLieAlgebra};
pub use cochain::{PairCochain, SkewCochain};
pub use linalg::{Matrix, Rational, Vector};
pub use report::{Report, Violation};
pub use representation::{Module, Representation};

use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("arity mismatch: cochain of degree {degree} takes {expected} arguments, got {got}")]
    ArityMismatch {
        degree: usize,
        expected: usize,
        got: usize,
    },
    #[error("algebra fails the fundamental identity ({} violating tuple(s))", .0.len())]
    InvalidAlgebra(Report),
    #[error("representation fails {context} ({} violating tuple(s))", report.len())]
    InvalidRepresentation {
        context: &'static str,
        report: Report,
    },
    #[error("operator is not Nijenhuis ({0} violating tuple(s))")]
    NotNijenhuis(usize),
    #[error("cochain is not a 1-cocycle ({} violating tuple(s))", .0.len())]
    NotCocycle(Report),
    #[error("invalid section: {0}")]
    InvalidSection(String),
    #[error("extension data violates its invariants: {0}")]
    StructuralError(String),
}
