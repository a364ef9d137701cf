//! Error types shared across the crate.

use thiserror::Error;

/// Which precondition of an elementary operation failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpViolation {
    /// The affected triangle is degenerate or contains extra lattice points.
    EarNotSimple,
    /// Applying the operation would leave a non-convex vertex cycle.
    ResultNotConvex,
    /// Applying the operation would leave fewer than three non-collinear vertices.
    ResultDegenerate,
    /// The origin would no longer be the unique strictly interior lattice point.
    OriginNotInterior,
    /// The point to insert already lies on the boundary.
    PointOnBoundary,
}

impl std::fmt::Display for OpViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OpViolation::EarNotSimple => "affected triangle is not simple",
            OpViolation::ResultNotConvex => "result would not be convex",
            OpViolation::ResultDegenerate => "result would be degenerate",
            OpViolation::OriginNotInterior => "origin would not stay strictly interior",
            OpViolation::PointOnBoundary => "point already lies on the boundary",
        };
        f.write_str(s)
    }
}

/// All failure modes of the toolkit.
///
/// Construction rejects each class of degenerate input with its own variant,
/// and every arithmetic path reports [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arithmetic overflow: intermediate value exceeds the 64-bit range")]
    Overflow,

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("repeated consecutive vertex at index {0}")]
    RepeatedVertex(usize),

    #[error("all vertices are collinear")]
    CollinearVertices,

    #[error("vertex cycle is not convex: bad turn at index {index}")]
    NotConvex { index: usize },

    #[error("vertex cycle winds around more than once")]
    SelfWrapping,

    #[error("polygon is not reflexive: interior points: {interior_points}")]
    NotReflexive { interior_points: i64 },

    #[error("Pick's formula gave a non-integer interior count; polygon data is inconsistent")]
    PickMismatch,

    #[error("zero vector has no primitive direction")]
    ZeroVector,

    #[error("matrix is not unimodular: determinant {det}")]
    NotUnimodular { det: i64 },

    #[error("index {index} out of range for cycle of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid elementary operation: {0}")]
    InvalidOperation(OpViolation),

    #[error("reduction contract violated: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
