//! Diagonalization by nested F4 conjugations.
//!
//! Each step conjugates by a Hermitian reflection `M` (with `M² = I`) whose
//! entries lie in a single complex subalgebra. That makes `M A M` well defined
//! without parenthesization and an automorphism of the Jordan product, so
//! trace, `σ` and determinant are preserved. The steps are applied one at a
//! time, `M₂(M₁ A M₁)M₂`, never as a product `(M₂M₁) A (M₁M₂)`.
//!
//! Given a unit eigenvector `v = (x, y, r)` with `r` real:
//!
//! ```text
//!      | -r  0   x |               | N₂  0    0 |
//! M₁ = |  0  N₁  0 | / N₁     M₂ = | 0  -N₁   y | / N₂
//!      |  x̄  0   r |               | 0   ȳ   N₁ |
//! ```
//!
//! with `N₁² = |x|² + r²`, `N₂² = N₁² + |y|²`, sends `v` to `(0, 0, 1)` and
//! leaves `λ` alone in the bottom corner. `M₃` then diagonalizes the remaining
//! 2x2 block.

use serde::{Deserialize, Serialize};

use crate::cubic::{solve_char_poly, Multiplicity};
use crate::eigen::decompose_with_roots;
use crate::error::{AlbertError, Result};
use crate::jordan::{CharPoly, JordanMatrix, OctVector3};
use crate::matrix::OctMatrix3;
use crate::octonion::Octonion;
use crate::tolerance::Tolerances;
use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagonalizationResult<T> {
    /// Conjugating matrices in the order applied: `M₁, M₂, M₃`.
    pub steps: Vec<JordanMatrix<T>>,
    /// Invariants of the input followed by those after each step.
    pub invariants: Vec<CharPoly<T>>,
    /// Eigenvalue used to build `M₁` and `M₂`; ends up in the last slot.
    pub pivot_eigenvalue: T,
    pub diagonal: [T; 3],
    /// Off-diagonal Frobenius norm of the final matrix.
    pub residual: T,
}

/// `M A M` for Hermitian `M` whose entries share one complex subalgebra.
pub fn f4_conjugate<T: Scalar>(m: &JordanMatrix<T>, a: &JordanMatrix<T>) -> JordanMatrix<T> {
    let mm = OctMatrix3::from_jordan(m);
    mm.mul(&OctMatrix3::from_jordan(a))
        .mul(&mm)
        .hermitian_part()
}

/// Right-multiplies `v` by the unit phase making its third component real
/// and non-negative.
pub fn phase_align<T: Scalar>(v: &OctVector3<T>) -> OctVector3<T> {
    let r = v.0[2].norm();
    if r == T::zero() {
        return *v;
    }
    let q = v.0[2].conj() / r;
    let mut out = v.right_mul(&q);
    out.0[2] = Octonion::real(r);
    out
}

/// Builds `(M₁, M₂)` with `M₂(M₁ v) = (0, 0, |v|)`.
///
/// Expects `v` already phase aligned; only the real part of `v₃` is used.
pub fn build_m1_m2<T: Scalar>(v: &OctVector3<T>) -> Result<(JordanMatrix<T>, JordanMatrix<T>)> {
    let [x, y, r] = v.0;
    let r = r.re();
    let n1 = (x.norm2() + r * r).sqrt();
    let n2 = (n1 * n1 + y.norm2()).sqrt();
    if n2 == T::zero() {
        return Err(AlbertError::ZeroVector);
    }
    let m1 = if n1 == T::zero() {
        JordanMatrix::identity()
    } else {
        JordanMatrix {
            p: -r / n1,
            m: T::one(),
            n: r / n1,
            a: Octonion::zero(),
            // (0, 2) entry is x = b̄.
            b: x.conj() / n1,
            c: Octonion::zero(),
        }
    };
    let m2 = JordanMatrix {
        p: T::one(),
        m: -n1 / n2,
        n: n1 / n2,
        a: Octonion::zero(),
        b: Octonion::zero(),
        c: y / n2,
    };
    Ok((m1, m2))
}

/// Reflection on the upper 2x2 block sending the `μ`-eigenvector of
/// `X = [[s, z], [z̄, t]]` to the first slot. `μ` is the larger root.
pub fn build_m3<T: Scalar>(s: T, t: T, z: &Octonion<T>) -> (JordanMatrix<T>, T) {
    let half = T::lit(0.5);
    let mu = half * (s + t) + (half * half * (s - t) * (s - t) + z.norm2()).sqrt();
    let dt = mu - t;
    let ds = mu - s;
    let zn = z.norm();
    // Two eigenvector forms: (μ - t, z̄) or (|z|, (μ - s) z̄/|z|); take the larger.
    let (alpha, beta) = if dt >= ds {
        (dt, *z)
    } else if zn == T::zero() {
        // Diagonal block with the larger entry second: swap the slots.
        (T::zero(), Octonion::one())
    } else {
        (zn, *z * (ds / zn))
    };
    let n3 = (alpha * alpha + beta.norm2()).sqrt();
    if n3 == T::zero() {
        return (JordanMatrix::identity(), mu);
    }
    let m3 = JordanMatrix {
        p: alpha / n3,
        m: -alpha / n3,
        n: T::one(),
        a: beta / n3,
        b: Octonion::zero(),
        c: Octonion::zero(),
    };
    (m3, mu)
}

/// Diagonalizes `A` with three F4 conjugations.
pub fn diagonalize<T: Scalar>(
    a: &JordanMatrix<T>,
    tol: &Tolerances,
) -> Result<DiagonalizationResult<T>> {
    let roots = solve_char_poly(&a.char_poly(), tol)?;
    let decomposition = decompose_with_roots(a, &roots, tol)?;
    let ev = roots.roots;

    let pick = match roots.multiplicity {
        Multiplicity::Triple(lambda) => {
            return Ok(DiagonalizationResult {
                steps: Vec::new(),
                invariants: vec![a.char_poly()],
                pivot_eigenvalue: lambda,
                diagonal: a.diagonal(),
                residual: a.off_diagonal_norm(),
            });
        }
        Multiplicity::Double(_) => roots
            .simple_index()
            .expect("double root has a simple partner"),
        // Best separated root.
        Multiplicity::Distinct => {
            let gaps = [
                ev[0] - ev[1],
                (ev[0] - ev[1]).min(ev[1] - ev[2]),
                ev[1] - ev[2],
            ];
            let mut k = 0;
            for i in 1..3 {
                if gaps[i] > gaps[k] {
                    k = i;
                }
            }
            k
        }
    };
    let lambda = ev[pick];
    let v = decomposition.eigenvectors[pick];
    let v = phase_align(&v.scale(v.norm().recip()));
    let (m1, m2) = build_m1_m2(&v)?;

    let a1 = f4_conjugate(&m1, a);
    let a2 = f4_conjugate(&m2, &a1);
    let (m3, _mu) = build_m3(a2.p, a2.m, &a2.a);
    let a3 = f4_conjugate(&m3, &a2);

    let residual = a3.off_diagonal_norm();
    if residual > tol.mtol::<T>() * (T::one() + a.norm()) {
        return Err(AlbertError::Inconsistent(format!(
            "off-diagonal residual {:e} after F4 diagonalization",
            residual.as_f64()
        )));
    }
    Ok(DiagonalizationResult {
        steps: vec![m1, m2, m3],
        invariants: vec![
            a.char_poly(),
            a1.char_poly(),
            a2.char_poly(),
            a3.char_poly(),
        ],
        pivot_eigenvalue: lambda,
        diagonal: a3.diagonal(),
        residual,
    })
}

/// Replays the steps of a diagonalization on `a`, returning every
/// intermediate matrix (input first).
pub fn replay<T: Scalar>(a: &JordanMatrix<T>, steps: &[JordanMatrix<T>]) -> Vec<JordanMatrix<T>> {
    let mut out = vec![*a];
    for m in steps {
        let next = f4_conjugate(m, out.last().expect("non-empty"));
        out.push(next);
    }
    out
}

/// Conjugation by the ordinary product `M₂M₁`, which for octonionic `A` is
/// not an F4 transformation. Exposed only to document the difference.
pub fn product_conjugate<T: Scalar>(
    m1: &JordanMatrix<T>,
    m2: &JordanMatrix<T>,
    a: &JordanMatrix<T>,
) -> JordanMatrix<T> {
    let x1 = OctMatrix3::from_jordan(m1);
    let x2 = OctMatrix3::from_jordan(m2);
    let left = x2.mul(&x1);
    let right = x1.mul(&x2);
    left.mul(&OctMatrix3::from_jordan(a))
        .mul(&right)
        .hermitian_part()
}

#[cfg(test)]
mod tests {
    use super::*;

    type O = Octonion<f64>;
    type J = JordanMatrix<f64>;

    fn e3() -> OctVector3<f64> {
        OctVector3::from_reals([0.0, 0.0, 1.0])
    }

    fn apply2(m1: &J, m2: &J, v: &OctVector3<f64>) -> OctVector3<f64> {
        m2.apply(&m1.apply(v))
    }

    #[test]
    fn phase_align_examples() {
        let v = OctVector3::new(O::zero(), O::zero(), O::basis(1));
        assert_eq!(phase_align(&v), e3());
        let v = OctVector3::from_reals([1.0, 0.0, 2.0]);
        assert_eq!(phase_align(&v), v);
        let v = OctVector3::new(O::basis(2), O::one(), O::zero());
        assert_eq!(phase_align(&v), v);
    }

    #[test]
    fn m1_m2_on_e3() {
        let (m1, m2) = build_m1_m2(&e3()).unwrap();
        assert_eq!(m1, J::diag(-1.0, 1.0, 1.0));
        assert_eq!(m2, J::diag(1.0, -1.0, 1.0));
        assert_eq!(apply2(&m1, &m2, &e3()), e3());
    }

    #[test]
    fn m1_m2_on_e1() {
        let v = OctVector3::from_reals([1.0, 0.0, 0.0]);
        let (m1, m2) = build_m1_m2(&v).unwrap();
        assert_eq!(m1.apply(&v), e3());
        assert_eq!(m2, J::diag(1.0, -1.0, 1.0));
        assert_eq!(apply2(&m1, &m2, &v), e3());
    }

    #[test]
    fn m1_is_identity_when_n1_vanishes() {
        let v = OctVector3::new(O::zero(), O::basis(5), O::zero());
        let (m1, m2) = build_m1_m2(&v).unwrap();
        assert_eq!(m1, J::identity());
        assert!(apply2(&m1, &m2, &v).sub(&e3()).norm() < 1e-15);
    }

    #[test]
    fn zero_vector_rejected() {
        let v = OctVector3::<f64>::default();
        assert_eq!(build_m1_m2(&v), Err(AlbertError::ZeroVector));
    }

    #[test]
    fn reflections_square_to_identity() {
        let v = phase_align(&OctVector3::new(
            O::new([0.2, 0.1, 0.0, 0.4, 0.0, 0.0, 0.0, 0.0]),
            O::new([0.3, 0.0, -0.5, 0.1, 0.0, 0.0, 0.0, 0.0]),
            O::new([0.4, -0.2, 0.3, 0.0, 0.0, 0.0, 0.0, 0.0]),
        ));
        let v = v.scale(1.0 / v.norm());
        let (m1, m2) = build_m1_m2(&v).unwrap();
        for m in [m1, m2] {
            let sq = OctMatrix3::from_jordan(&m).mul(&OctMatrix3::from_jordan(&m));
            assert!((sq.hermitian_part() - J::identity()).norm() < 1e-15);
            assert!(sq.anti_hermitian_norm() < 1e-15);
        }
        assert!(apply2(&m1, &m2, &v).sub(&e3()).norm() < 1e-15);
    }

    #[test]
    fn diagonalize_diagonal_input() {
        let r = diagonalize(&J::diag(1.0, 2.0, 3.0), &Tolerances::default()).unwrap();
        let mut d = r.diagonal;
        d.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(d, [1.0, 2.0, 3.0]);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn diagonalize_identity_is_immediate() {
        let r = diagonalize(&J::identity(), &Tolerances::default()).unwrap();
        assert!(r.steps.is_empty());
        assert_eq!(r.diagonal, [1.0; 3]);
    }

    #[test]
    fn diagonalize_ones_off_diagonal() {
        let a = J::new(0.0, 0.0, 0.0, O::one(), O::one(), O::one());
        let r = diagonalize(&a, &Tolerances::default()).unwrap();
        let mut d = r.diagonal;
        d.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (x, y) in d.iter().zip([2.0, -1.0, -1.0]) {
            assert!((x - y).abs() < 1e-8);
        }
        assert!((r.pivot_eigenvalue - 2.0).abs() < 1e-12);
    }

    #[test]
    fn m3_diagonalizes_block() {
        let z = O::new([0.3, 0.0, 0.0, 0.0, 0.0, 0.0, -0.7, 0.0]);
        for (s, t) in [(0.5, -0.2), (-0.2, 0.5), (0.1, 0.1)] {
            let x = J::new(s, t, 0.0, z, O::zero(), O::zero());
            let (m3, mu) = build_m3(s, t, &z);
            let y = f4_conjugate(&m3, &x);
            assert!(y.off_diagonal_norm() < 1e-15);
            assert!((y.p - mu).abs() < 1e-15);
            assert!((y.m - (s + t - mu)).abs() < 1e-15);
        }
        let (m3, _) = build_m3(0.4, 0.4, &O::zero());
        assert_eq!(m3, J::identity());
        let (m3, mu) = build_m3(-0.4, 0.4, &O::zero());
        assert_eq!(mu, 0.4);
        let y = f4_conjugate(&m3, &J::diag(-0.4, 0.4, 0.0));
        assert_eq!(y, J::diag(0.4, -0.4, 0.0));
    }
}
