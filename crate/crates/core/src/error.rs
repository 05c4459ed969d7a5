use thiserror::Error;

/// Failure modes of the algebraic routines.
///
/// Numeric payloads are carried as `f64` regardless of the scalar type so that
/// the error stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlbertError {
    #[error("division by the zero octonion")]
    DivisionByZero,
    #[error("vector components do not associate (associator norm {associator:e})")]
    NonAssociativeComponents { associator: f64 },
    #[error("matrix is not rank one (Freudenthal square norm {residual:e})")]
    NotRankOne { residual: f64 },
    #[error("matrix has non-positive trace {trace:e}; no vector to extract")]
    ZeroMatrix { trace: f64 },
    #[error("characteristic cubic has complex roots (normalized discriminant {discriminant:e})")]
    ComplexRoots { discriminant: f64 },
    #[error("{lambda} is not a root of the characteristic equation (residual {residual:e})")]
    NotAnEigenvalue { lambda: f64, residual: f64 },
    #[error("Q matrix has vanishing trace {trace:e}; eigenvalue is repeated")]
    ZeroQMatrix { trace: f64 },
    #[error("{lambda} is not an eigenvalue of multiplicity two: {reason}")]
    NotDoubleRoot { lambda: f64, reason: String },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("vector is zero")]
    ZeroVector,
    #[error("momentum is not null (det {det:e})")]
    NonNullMomentum { det: f64 },
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

pub type Result<T> = std::result::Result<T, AlbertError>;
