//! The Albert algebra of 3x3 octonionic Hermitian matrices.
//!
//! A Jordan matrix is stored by its six independent entries,
//!
//! ```text
//!     | p     a     b̄ |
//! A = | ā     m     c |
//!     | b     c̄     n |
//! ```
//!
//! so Hermiticity holds by construction.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::matrix::OctMatrix3;
use crate::octonion::{associator, Octonion};
use crate::tolerance::Tolerances;
use crate::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct JordanMatrix<T> {
    pub p: T,
    pub m: T,
    pub n: T,
    pub a: Octonion<T>,
    pub b: Octonion<T>,
    pub c: Octonion<T>,
}

/// Coefficients of `λ³ - trace λ² + sigma λ - det`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharPoly<T> {
    pub trace: T,
    pub sigma: T,
    pub det: T,
}

impl<T: Scalar> CharPoly<T> {
    /// Value of the characteristic polynomial at `x`.
    pub fn eval(&self, x: T) -> T {
        ((x - self.trace) * x + self.sigma) * x - self.det
    }
}

impl<T: Scalar> JordanMatrix<T> {
    pub fn new(p: T, m: T, n: T, a: Octonion<T>, b: Octonion<T>, c: Octonion<T>) -> Self {
        Self { p, m, n, a, b, c }
    }

    pub fn zero() -> Self {
        Self::diag(T::zero(), T::zero(), T::zero())
    }

    pub fn identity() -> Self {
        Self::diag(T::one(), T::one(), T::one())
    }

    pub fn diag(p: T, m: T, n: T) -> Self {
        Self {
            p,
            m,
            n,
            a: Octonion::zero(),
            b: Octonion::zero(),
            c: Octonion::zero(),
        }
    }

    /// Diagonal matrix unit `E_ii` (0-based index).
    pub fn unit(i: usize) -> Self {
        let mut d = [T::zero(); 3];
        d[i] = T::one();
        Self::diag(d[0], d[1], d[2])
    }

    /// Entry `(i, j)` of the full 3x3 octonionic matrix.
    pub fn entry(&self, i: usize, j: usize) -> Octonion<T> {
        match (i, j) {
            (0, 0) => Octonion::real(self.p),
            (1, 1) => Octonion::real(self.m),
            (2, 2) => Octonion::real(self.n),
            (0, 1) => self.a,
            (1, 0) => self.a.conj(),
            (1, 2) => self.c,
            (2, 1) => self.c.conj(),
            (2, 0) => self.b,
            (0, 2) => self.b.conj(),
            _ => panic!("Jordan matrix index ({i}, {j}) out of range"),
        }
    }

    pub fn diagonal(&self) -> [T; 3] {
        [self.p, self.m, self.n]
    }

    /// The three independent off-diagonal entries `[a, b, c]`.
    pub fn off_diagonal(&self) -> [Octonion<T>; 3] {
        [self.a, self.b, self.c]
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            p: self.p * s,
            m: self.m * s,
            n: self.n * s,
            a: self.a * s,
            b: self.b * s,
            c: self.c * s,
        }
    }

    /// `self - λ I`.
    pub fn shift(&self, lambda: T) -> Self {
        Self {
            p: self.p - lambda,
            m: self.m - lambda,
            n: self.n - lambda,
            ..*self
        }
    }

    pub fn trace(&self) -> T {
        self.p + self.m + self.n
    }

    pub fn sigma(&self) -> T {
        self.p * self.m + self.m * self.n + self.p * self.n
            - self.a.norm2()
            - self.b.norm2()
            - self.c.norm2()
    }

    /// Determinant from the closed form in the entries.
    pub fn det(&self) -> T {
        let two = T::lit(2.0);
        let bac = self.b * (self.a * self.c);
        self.p * self.m * self.n + two * bac.re()
            - self.n * self.a.norm2()
            - self.m * self.b.norm2()
            - self.p * self.c.norm2()
    }

    /// Determinant as `tr((A*A)∘A) / 3`.
    pub fn det_trace_form(&self) -> T {
        self.freudenthal_square().jordan(self).trace() / T::lit(3.0)
    }

    /// `A - tr(A) I`.
    pub fn trace_reversal(&self) -> Self {
        self.shift(self.trace())
    }

    pub fn char_poly(&self) -> CharPoly<T> {
        CharPoly {
            trace: self.trace(),
            sigma: self.sigma(),
            det: self.det(),
        }
    }

    /// Jordan product `(AB + BA) / 2`.
    pub fn jordan(&self, other: &Self) -> Self {
        let x = OctMatrix3::from_jordan(self);
        let y = OctMatrix3::from_jordan(other);
        let sum = x.mul(&y).add(&y.mul(&x));
        sum.hermitian_part().scale(T::lit(0.5))
    }

    /// Jordan square `A∘A`.
    pub fn square(&self) -> Self {
        self.jordan(self)
    }

    /// Jordan cube `A²∘A`.
    pub fn cube(&self) -> Self {
        self.square().jordan(self)
    }

    /// Freudenthal product
    /// `A∘B - (A tr B + B tr A)/2 + (tr A tr B - tr(A∘B)) I / 2`.
    pub fn freudenthal(&self, other: &Self) -> Self {
        let half = T::lit(0.5);
        let ta = self.trace();
        let tb = other.trace();
        let ab = self.jordan(other);
        let shift = half * (ta * tb - ab.trace());
        (ab - (self.scale(tb) + other.scale(ta)).scale(half)).shift(-shift)
    }

    /// `A*A = A² - tr(A) A + σ(A) I`.
    pub fn freudenthal_square(&self) -> Self {
        (self.square() - self.scale(self.trace())).shift(-self.sigma())
    }

    /// Frobenius norm, `sqrt(tr(A∘A))`.
    pub fn norm(&self) -> T {
        let two = T::lit(2.0);
        (self.p * self.p
            + self.m * self.m
            + self.n * self.n
            + two * (self.a.norm2() + self.b.norm2() + self.c.norm2()))
        .sqrt()
    }

    /// Frobenius norm of the off-diagonal part.
    pub fn off_diagonal_norm(&self) -> T {
        (T::lit(2.0) * (self.a.norm2() + self.b.norm2() + self.c.norm2())).sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tolerances) -> bool {
        tol.within((*self - *other).norm(), self.norm().max(other.norm()))
    }

    /// Largest associator norm over ordered triples of off-diagonal entries.
    ///
    /// Zero (up to rounding) exactly when all entries lie in one quaternionic
    /// subalgebra.
    pub fn max_associator(&self) -> T {
        let ent = self.off_diagonal();
        let mut worst = T::zero();
        for x in &ent {
            for y in &ent {
                for z in &ent {
                    worst = worst.max(associator(x, y, z).norm());
                }
            }
        }
        worst
    }

    /// `u v† + v u†`.
    pub fn symmetric_outer(u: &OctVector3<T>, v: &OctVector3<T>) -> Self {
        let two = T::lit(2.0);
        let uv = |i: usize, j: usize| u.0[i] * v.0[j].conj() + v.0[i] * u.0[j].conj();
        Self {
            p: two * u.0[0].dot(&v.0[0]),
            m: two * u.0[1].dot(&v.0[1]),
            n: two * u.0[2].dot(&v.0[2]),
            a: uv(0, 1),
            b: uv(2, 0),
            c: uv(1, 2),
        }
    }

    /// Applies the matrix to a column, `(Av)_i = Σ_j A_ij v_j`.
    pub fn apply(&self, v: &OctVector3<T>) -> OctVector3<T> {
        let mut out = [Octonion::zero(); 3];
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..3 {
                *o += self.entry(i, j) * v.0[j];
            }
        }
        OctVector3(out)
    }

    pub fn cast<U: Scalar>(&self) -> JordanMatrix<U> {
        JordanMatrix {
            p: U::lit(self.p.as_f64()),
            m: U::lit(self.m.as_f64()),
            n: U::lit(self.n.as_f64()),
            a: self.a.cast(),
            b: self.b.cast(),
            c: self.c.cast(),
        }
    }
}

/// Free-function form of [`JordanMatrix::jordan`].
pub fn jordan_product<T: Scalar>(a: &JordanMatrix<T>, b: &JordanMatrix<T>) -> JordanMatrix<T> {
    a.jordan(b)
}

/// Free-function form of [`JordanMatrix::freudenthal`].
pub fn freudenthal_product<T: Scalar>(a: &JordanMatrix<T>, b: &JordanMatrix<T>) -> JordanMatrix<T> {
    a.freudenthal(b)
}

/// Membership in the Cayley plane: `V∘V = V` and `tr V = 1`, both to `tol`.
pub fn cayley_plane_check<T: Scalar>(v: &JordanMatrix<T>, tol: T) -> bool {
    (v.square() - *v).norm() <= tol && (v.trace() - T::one()).abs() <= tol
}

/// `vv†`, refusing vectors whose components fail to associate.
pub fn rank1_from_vector<T: Scalar>(
    v: &OctVector3<T>,
    tol: &Tolerances,
) -> Result<JordanMatrix<T>> {
    let assoc = v.associator_norm();
    let scale = v.norm2() * v.norm2().sqrt();
    if assoc > tol.atol::<T>() + tol.mtol::<T>() * scale {
        return Err(AlbertError::NonAssociativeComponents {
            associator: assoc.as_f64(),
        });
    }
    Ok(v.outer())
}

/// Recovers `v` with `vv† = V` from a rank-one Jordan matrix.
///
/// The pivot is the largest diagonal entry (lowest index on ties), and the
/// pivot component of `v` is the positive real `sqrt(V_kk)`.
pub fn extract_vector<T: Scalar>(v: &JordanMatrix<T>, tol: &Tolerances) -> Result<OctVector3<T>> {
    let norm = v.norm();
    let tr = v.trace();
    if tr <= tol.atol::<T>() + tol.rtol::<T>() * norm {
        return Err(AlbertError::ZeroMatrix { trace: tr.as_f64() });
    }
    let residual = v.freudenthal_square().norm();
    if residual > tol.mtol::<T>() * norm * norm {
        return Err(AlbertError::NotRankOne {
            residual: residual.as_f64(),
        });
    }
    let d = v.diagonal();
    let mut k = 0;
    for i in 1..3 {
        if d[i] > d[k] {
            k = i;
        }
    }
    let root = d[k].sqrt();
    let mut out = [Octonion::zero(); 3];
    for (i, o) in out.iter_mut().enumerate() {
        *o = if i == k {
            Octonion::real(root)
        } else {
            v.entry(i, k) / root
        };
    }
    Ok(OctVector3(out))
}

impl<T: Scalar> Add for JordanMatrix<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            p: self.p + rhs.p,
            m: self.m + rhs.m,
            n: self.n + rhs.n,
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
        }
    }
}

impl<T: Scalar> Sub for JordanMatrix<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self {
            p: self.p - rhs.p,
            m: self.m - rhs.m,
            n: self.n - rhs.n,
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            c: self.c - rhs.c,
        }
    }
}

impl<T: Scalar> Neg for JordanMatrix<T> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Mul<T> for JordanMatrix<T> {
    type Output = Self;

    fn mul(self, rhs: T) -> Self {
        self.scale(rhs)
    }
}

/// A column of three octonions. Serialized as `[[8], [8], [8]]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OctVector3<T>(pub [Octonion<T>; 3]);

impl<T: Scalar> OctVector3<T> {
    pub fn new(v1: Octonion<T>, v2: Octonion<T>, v3: Octonion<T>) -> Self {
        Self([v1, v2, v3])
    }

    pub fn from_reals(x: [T; 3]) -> Self {
        Self(x.map(Octonion::real))
    }

    /// `v†v`.
    pub fn norm2(&self) -> T {
        self.0.iter().map(Octonion::norm2).sum()
    }

    pub fn norm(&self) -> T {
        self.norm2().sqrt()
    }

    /// `v†w = Σ conj(v_i) w_i`.
    pub fn inner(&self, w: &Self) -> Octonion<T> {
        self.0
            .iter()
            .zip(w.0.iter())
            .fold(Octonion::zero(), |acc, (x, y)| acc + x.conj() * *y)
    }

    pub fn scale(&self, s: T) -> Self {
        Self(self.0.map(|x| x * s))
    }

    /// Right multiplication of every component, `v q`.
    pub fn right_mul(&self, q: &Octonion<T>) -> Self {
        Self(self.0.map(|x| x * *q))
    }

    pub fn sub(&self, w: &Self) -> Self {
        Self([self.0[0] - w.0[0], self.0[1] - w.0[1], self.0[2] - w.0[2]])
    }

    /// `vv†`, formed entrywise without any associativity check.
    pub fn outer(&self) -> JordanMatrix<T> {
        let v = &self.0;
        JordanMatrix {
            p: v[0].norm2(),
            m: v[1].norm2(),
            n: v[2].norm2(),
            a: v[0] * v[1].conj(),
            b: v[2] * v[0].conj(),
            c: v[1] * v[2].conj(),
        }
    }

    /// Largest associator norm over ordered triples of components.
    pub fn associator_norm(&self) -> T {
        let mut worst = T::zero();
        for x in &self.0 {
            for y in &self.0 {
                for z in &self.0 {
                    worst = worst.max(associator(x, y, z).norm());
                }
            }
        }
        worst
    }

    /// The 24 real coordinates, slot-major.
    pub fn coords(&self) -> [T; 24] {
        let mut out = [T::zero(); 24];
        for (i, x) in self.0.iter().enumerate() {
            out[8 * i..8 * i + 8].copy_from_slice(x.coeffs());
        }
        out
    }

    pub fn from_coords(c: &[T]) -> Self {
        assert_eq!(c.len(), 24, "expected 24 real coordinates");
        let slot = |i: usize| {
            let mut x = [T::zero(); 8];
            x.copy_from_slice(&c[8 * i..8 * i + 8]);
            Octonion::new(x)
        };
        Self([slot(0), slot(1), slot(2)])
    }
}
