//! Tolerance policy.
//!
//! Every numeric decision in the crate (approximate equality, rank-one and
//! repeated-root detection, residual gates) is taken against one of the three
//! knobs below. Values are kept in `f64` and converted on use so that one
//! configuration serves both scalar widths.

use serde::{Deserialize, Serialize};

use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute floor for approximate equality.
    pub atol: f64,
    /// Relative tolerance for approximate equality and algebraic residuals.
    pub rtol: f64,
    /// Root-merging threshold, relative to `1 + max |root|`. Also gates the
    /// structural decisions that follow from a repeated root.
    pub mtol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            atol: 1e-12,
            rtol: 1e-10,
            mtol: 1e-7,
        }
    }
}

impl Tolerances {
    /// Looser preset for `f32` arithmetic.
    pub fn single_precision() -> Self {
        Self {
            atol: 1e-5,
            rtol: 1e-4,
            mtol: 1e-3,
        }
    }

    #[inline]
    pub fn atol<T: Scalar>(&self) -> T {
        T::lit(self.atol)
    }

    #[inline]
    pub fn rtol<T: Scalar>(&self) -> T {
        T::lit(self.rtol)
    }

    #[inline]
    pub fn mtol<T: Scalar>(&self) -> T {
        T::lit(self.mtol)
    }

    /// `|diff| <= atol + rtol * magnitude`, where `diff` is a distance and
    /// `magnitude` the larger of the two operand norms.
    #[inline]
    pub fn within<T: Scalar>(&self, diff: T, magnitude: T) -> bool {
        diff <= self.atol::<T>() + self.rtol::<T>() * magnitude
    }
}
