use thiserror::Error;

use crate::lattice::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lattice points must have at least one coordinate")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("adjacency parameter u={u} is outside [1, {dim}]")]
    AdjacencyOutOfRange { u: usize, dim: usize },
    #[error("images must contain at least one point")]
    EmptyImage,
    #[error("point set must be nonempty")]
    EmptySet,
    #[error("point {0} is not in the image")]
    PointNotInImage(LatticePoint),
    #[error("point {0} lies outside the ambient image")]
    NotInAmbient(LatticePoint),
    #[error("exponent p={0} must be a finite number >= 1")]
    InvalidExponent(f64),
    #[error("threshold t={0} must be a finite number >= 0")]
    InvalidThreshold(f64),
    #[error("weights must be finite and strictly positive, got {0}")]
    InvalidWeight(f64),
    #[error("a weighted sum needs at least one term")]
    EmptySum,
    #[error("images use different adjacencies (u={source_u} and u={target_u})")]
    AdjacencyMismatch { source_u: usize, target_u: usize },
    #[error("map is not defined at {0}")]
    UndefinedAt(LatticePoint),
    #[error("map sends {from} to {to}, which is not in the target image")]
    ValueOutsideTarget {
        from: LatticePoint,
        to: LatticePoint,
    },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("search budget of {0} node expansions exceeded")]
    BudgetExceeded(u64),
}
