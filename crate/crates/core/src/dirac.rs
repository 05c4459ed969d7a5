//! 2x2 octonionic Hermitian momenta, the null Dirac equation `P̃ψ = 0`, its
//! three-component packaging, and the p-square classification.

use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::jordan::{JordanMatrix, OctVector3};
use crate::octonion::Octonion;
use crate::tolerance::Tolerances;
use crate::Scalar;

/// `P = [[s, z], [z̄, t]]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Hermitian2<T> {
    pub s: T,
    pub t: T,
    pub z: Octonion<T>,
}

/// A two-component octonionic column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OctVector2<T>(pub [Octonion<T>; 2]);

impl<T: Scalar> OctVector2<T> {
    pub fn norm2(&self) -> T {
        self.0[0].norm2() + self.0[1].norm2()
    }

    pub fn norm(&self) -> T {
        self.norm2().sqrt()
    }

    pub fn right_mul(&self, q: &Octonion<T>) -> Self {
        Self(self.0.map(|x| x * *q))
    }

    /// `θθ†`.
    pub fn outer(&self) -> Hermitian2<T> {
        Hermitian2 {
            s: self.0[0].norm2(),
            t: self.0[1].norm2(),
            z: self.0[0] * self.0[1].conj(),
        }
    }
}

impl<T: Scalar> Hermitian2<T> {
    pub fn new(s: T, t: T, z: Octonion<T>) -> Self {
        Self { s, t, z }
    }

    pub fn det(&self) -> T {
        self.s * self.t - self.z.norm2()
    }

    pub fn trace(&self) -> T {
        self.s + self.t
    }

    /// `P - tr(P) I = [[-t, z], [z̄, -s]]`.
    pub fn trace_reversal(&self) -> Self {
        Self {
            s: -self.t,
            t: -self.s,
            z: self.z,
        }
    }

    pub fn scale(&self, k: T) -> Self {
        Self {
            s: self.s * k,
            t: self.t * k,
            z: self.z * k,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            s: self.s - o.s,
            t: self.t - o.t,
            z: self.z - o.z,
        }
    }

    pub fn norm(&self) -> T {
        (self.s * self.s + self.t * self.t + T::lit(2.0) * self.z.norm2()).sqrt()
    }

    pub fn apply(&self, v: &OctVector2<T>) -> OctVector2<T> {
        let [v1, v2] = v.0;
        OctVector2([
            Octonion::real(self.s) * v1 + self.z * v2,
            self.z.conj() * v1 + Octonion::real(self.t) * v2,
        ])
    }
}

/// Rank-one factorization `P = sign · θθ†` of a null momentum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiracSolution<T> {
    pub theta: OctVector2<T>,
    pub sign: i8,
}

impl<T: Scalar> DiracSolution<T> {
    /// `ψ = θξ`, a solution of `P̃ψ = 0` for any `ξ`.
    pub fn psi(&self, xi: &Octonion<T>) -> OctVector2<T> {
        self.theta.right_mul(xi)
    }
}

/// Solves `P̃ψ = 0` for `det P = 0`: returns `θ` with `P = ±θθ†`.
///
/// The pivot is the larger diagonal entry of `±P` (first on ties) and the
/// pivot component of `θ` is its positive real square root.
pub fn dirac_solve<T: Scalar>(p: &Hermitian2<T>, tol: &Tolerances) -> Result<DiracSolution<T>> {
    let det = p.det();
    let scale = p.norm();
    if det.abs() > tol.atol::<T>() + tol.rtol::<T>() * scale * scale {
        return Err(AlbertError::NonNullMomentum { det: det.as_f64() });
    }
    let sign: i8 = if p.trace() < T::zero() { -1 } else { 1 };
    let q = if sign < 0 { p.scale(-T::one()) } else { *p };
    let theta = if q.s == T::zero() && q.t == T::zero() {
        OctVector2::default()
    } else if q.s >= q.t {
        let root = q.s.sqrt();
        OctVector2([Octonion::real(root), q.z.conj() / root])
    } else {
        let root = q.t.sqrt();
        OctVector2([q.z / root, Octonion::real(root)])
    };
    Ok(DiracSolution { theta, sign })
}

/// `Ψ = (θ; ξ̄)` and the Jordan matrix `ΨΨ† = [[θθ†, θξ], [(θξ)†, |ξ|²]]`,
/// built entrywise from the block form.
pub fn psi_pack<T: Scalar>(
    theta: &OctVector2<T>,
    xi: &Octonion<T>,
) -> (OctVector3<T>, JordanMatrix<T>) {
    let [t1, t2] = theta.0;
    let psi = OctVector3::new(t1, t2, xi.conj());
    let block = theta.outer();
    let packed = JordanMatrix {
        p: block.s,
        m: block.t,
        n: xi.norm2(),
        a: block.z,
        // (0, 2) entry θ₁ξ is b̄.
        b: (t1 * *xi).conj(),
        c: t2 * *xi,
    };
    (psi, packed)
}

/// Number of nonzero terms in the primitive idempotent decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PSquareClass(pub u8);

/// Default relative threshold for the class boundaries.
pub const CLASS_RTOL: f64 = 1e-8;

pub fn classify_psquare<T: Scalar>(a: &JordanMatrix<T>) -> PSquareClass {
    classify_psquare_with(a, T::lit(CLASS_RTOL))
}

/// Thresholds scale with the degree of each invariant: `rtol ‖A‖³` for det,
/// `rtol ‖A‖²` for `σ`, `rtol ‖A‖` for the trace.
pub fn classify_psquare_with<T: Scalar>(a: &JordanMatrix<T>, rtol: T) -> PSquareClass {
    let n = a.norm();
    if a.det().abs() > rtol * n * n * n {
        PSquareClass(3)
    } else if a.sigma().abs() > rtol * n * n {
        PSquareClass(2)
    } else if a.trace().abs() > rtol * n {
        PSquareClass(1)
    } else {
        PSquareClass(0)
    }
}
