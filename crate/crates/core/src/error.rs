//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("metric is degenerate (determinant vanishes)")]
    DegenerateMetric,
    #[error("metric is not symmetric")]
    NotSymmetric,
    #[error("vector is not isotropic")]
    NotIsotropic,
    #[error("metric is not Lorentzian (signature must be (1, n-1))")]
    NotLorentzian,
    #[error("vectors do not form a basis")]
    SingularBasis,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiFailed { i: usize, j: usize, k: usize },
    #[error("double extension parameters are not admissible")]
    NotAdmissible,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("subspace {0} is nondegenerate; extraction mode requires a degenerate one")]
    NondegenerateSubspace(String),
    #[error("no rational isotropic vector found in {0}")]
    NoRationalIsotropicVector(String),
    #[error("{0} requires exact mode")]
    ExactModeRequired(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
