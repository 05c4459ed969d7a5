//! Exceptional Jordan algebra of 3x3 octonionic Hermitian matrices.
//!
//! * [`octonion`]: octonion arithmetic with a fixed Cayley–Dickson table.
//! * [`jordan`]: Jordan matrices, the Jordan and Freudenthal products, trace,
//!   `σ`, determinant and rank-one vectors.
//! * [`cubic`]: real roots of the characteristic cubic.
//! * [`eigen`]: primitive idempotent decomposition `A = Σ λ_i P_i`.
//! * [`f4`]: diagonalization by nested F4 reflections.
//! * [`oracle`]: independent check through the 24x24 real embedding.
//! * [`dirac`]: 2x2 null momenta and the p-square classification.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix the usual double-precision instantiation.

pub mod cubic;
pub mod dirac;
pub mod eigen;
pub mod error;
pub mod f4;
pub mod jordan;
mod matrix;
pub mod octonion;
pub mod oracle;
pub mod sampling;
mod scalar;
pub mod tolerance;

pub use cubic::{solve_char_poly, solve_characteristic, CubicRoots, Multiplicity};
pub use dirac::{
    classify_psquare, classify_psquare_with, dirac_solve, psi_pack, DiracSolution, Hermitian2,
    OctVector2, PSquareClass,
};
pub use eigen::{
    decompose, double_root_split, idempotent_from_q, invariant_double_decomposition, q_matrix,
    InvariantSplit, Residuals, SpectralDecomposition,
};
pub use error::{AlbertError, Result};
pub use f4::{build_m1_m2, diagonalize, f4_conjugate, phase_align, DiagonalizationResult};
pub use jordan::{
    cayley_plane_check, extract_vector, freudenthal_product, jordan_product, rank1_from_vector,
    CharPoly, JordanMatrix, OctVector3,
};
pub use octonion::{associator, Octonion};
pub use oracle::{
    embed, embed_in, modified_char_check, modified_char_check_in, symmetric_eigenvalues,
    OracleReport, RealSymmetric24,
};
pub use scalar::Scalar;
pub use tolerance::Tolerances;

pub type Octonion64 = Octonion<f64>;
pub type Octonion32 = Octonion<f32>;
pub type Jordan64 = JordanMatrix<f64>;
pub type Jordan32 = JordanMatrix<f32>;
pub type OctVector3F64 = OctVector3<f64>;
pub type Hermitian2F64 = Hermitian2<f64>;
pub type Spectral64 = SpectralDecomposition<f64>;
pub type Diagonalization64 = DiagonalizationResult<f64>;
pub type OracleReport64 = OracleReport<f64>;
