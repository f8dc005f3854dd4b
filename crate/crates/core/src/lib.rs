//! Exact (rational) and floating-point computation of curvature invariants of
//! finite-dimensional pseudo-Euclidean Lie algebras.
//!
//! The crate provides:
//!
//! * pseudo-Euclidean linear algebra (signatures, metric adjoints, Witt bases,
//!   degenerate subspaces) over exact rationals or `f64`,
//! * metric-free Lie algebra structure (brackets, Killing form, solvability
//!   ladders, derivations),
//! * the curvature engine for left-invariant metrics: Levi-Civita products,
//!   curvature operators, Ricci by three independent routes, the operators
//!   `B̂`, `J₁`, `J₂` and the mean-curvature vector,
//! * the double extension of a Euclidean Lie algebra together with the
//!   admissibility / Einstein conditions on its parameters and the inverse
//!   extraction for Lorentzian algebras with degenerate derived ideal or
//!   degenerate center,
//! * a certified generator of Ricci-flat Lorentzian solvable unimodular
//!   examples, and
//! * JSON file formats for algebras, parameters, reports and certificates.

pub mod corpus;
pub mod dext;
pub mod error;
pub mod format;
pub mod lie;
pub mod matrix;
pub mod metric;
pub mod poly;
pub mod pseudo;
pub mod scalar;
pub mod search;

pub use error::Error;
pub use scalar::{Rational, Scalar};
