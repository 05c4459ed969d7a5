//! The Jordan eigenmatrix problem `A∘V = λV` with `V` in the Cayley plane.
//!
//! For a simple root `λ` of the characteristic equation, the Freudenthal
//! square `Q_λ = (A - λI)*(A - λI)` is a nonzero rank-one solution and
//! `P_λ = Q_λ / tr Q_λ` is the primitive idempotent. `tr Q_λ` equals
//! `(λ - μ)(λ - ν)`, so `Q_λ` vanishes exactly at repeated roots; those are
//! handled by [`double_root_split`] and the trivial `A = λI` case.

use serde::{Deserialize, Serialize};

use crate::cubic::{solve_char_poly, CubicRoots, Multiplicity};
use crate::error::{AlbertError, Result};
use crate::jordan::{extract_vector, rank1_from_vector, JordanMatrix, OctVector3};
use crate::octonion::Octonion;
use crate::tolerance::Tolerances;
use crate::Scalar;

/// Per-pair diagnostics of a decomposition. Pair order is `(0,1), (0,2), (1,2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residuals<T> {
    /// `‖A∘P_i - λ_i P_i‖`.
    pub eigen: [T; 3],
    /// `‖P_i∘P_j‖`.
    pub orthogonality: [T; 3],
    /// `‖P_i∘P_i - P_i‖ + |tr P_i - 1|`.
    pub idempotency: [T; 3],
    /// Largest associator among the off-diagonal entries of `P_i`.
    pub associator: [T; 3],
    /// `‖Σ P_i - I‖`.
    pub completeness: T,
    /// `‖Σ λ_i P_i - A‖`.
    pub reconstruction: T,
}

impl<T: Scalar> Residuals<T> {
    fn measure(a: &JordanMatrix<T>, eigenvalues: &[T; 3], ps: &[JordanMatrix<T>; 3]) -> Self {
        let eigen = [0, 1, 2].map(|i| (a.jordan(&ps[i]) - ps[i].scale(eigenvalues[i])).norm());
        let orthogonality = PAIRS.map(|(i, j)| ps[i].jordan(&ps[j]).norm());
        let idempotency = ps.map(|p| (p.square() - p).norm() + (p.trace() - T::one()).abs());
        let associator = ps.map(|p| p.max_associator());
        let completeness = (ps[0] + ps[1] + ps[2] - JordanMatrix::identity()).norm();
        let rebuilt = ps
            .iter()
            .zip(eigenvalues.iter())
            .fold(JordanMatrix::zero(), |acc, (p, &l)| acc + p.scale(l));
        Self {
            eigen,
            orthogonality,
            idempotency,
            associator,
            completeness,
            reconstruction: (rebuilt - *a).norm(),
        }
    }

    pub fn max_eigen(&self) -> T {
        max3(&self.eigen)
    }

    pub fn max_orthogonality(&self) -> T {
        max3(&self.orthogonality)
    }

    pub fn max_idempotency(&self) -> T {
        max3(&self.idempotency)
    }

    pub fn max_associator(&self) -> T {
        max3(&self.associator)
    }
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn max3<T: Scalar>(x: &[T; 3]) -> T {
    x[0].max(x[1]).max(x[2])
}

/// Eigenvalues (descending) with matched primitive idempotents `P_i = v_i v_i†`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralDecomposition<T> {
    pub eigenvalues: [T; 3],
    pub idempotents: [JordanMatrix<T>; 3],
    pub eigenvectors: [OctVector3<T>; 3],
    pub residuals: Residuals<T>,
}

/// The multiplicity-two decomposition that needs no choice of basis:
/// `A = μ P + λ R` with `P` primitive and `R = I - P` idempotent of trace 2.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantSplit<T> {
    pub mu: T,
    pub primitive: JordanMatrix<T>,
    pub lambda: T,
    pub complement: JordanMatrix<T>,
}

fn scale_of<T: Scalar>(a: &JordanMatrix<T>, lambda: T) -> T {
    T::one() + a.norm() + lambda.abs()
}

/// `Q_λ = (A - λI)*(A - λI)`, after checking that `λ` solves the
/// characteristic equation.
pub fn q_matrix<T: Scalar>(
    a: &JordanMatrix<T>,
    lambda: T,
    tol: &Tolerances,
) -> Result<JordanMatrix<T>> {
    let residual = a.char_poly().eval(lambda);
    let s = scale_of(a, lambda);
    if residual.abs() > tol.rtol::<T>() * s * s * s {
        return Err(AlbertError::NotAnEigenvalue {
            lambda: lambda.as_f64(),
            residual: residual.as_f64(),
        });
    }
    Ok(a.shift(lambda).freudenthal_square())
}

/// `P = Q / tr Q`. `tr Q` is negative for the middle eigenvalue, so only
/// its magnitude is tested against `tol`.
pub fn idempotent_from_q<T: Scalar>(q: &JordanMatrix<T>, tol: T) -> Result<JordanMatrix<T>> {
    let tr = q.trace();
    if tr.abs() <= tol {
        return Err(AlbertError::ZeroQMatrix { trace: tr.as_f64() });
    }
    Ok(q.scale(tr.recip()))
}

fn check_double<T: Scalar>(
    a: &JordanMatrix<T>,
    lambda: T,
    tol: &Tolerances,
) -> Result<JordanMatrix<T>> {
    let shifted = a.shift(lambda);
    let s = scale_of(a, lambda);
    let mtol = tol.mtol::<T>();
    let fail = |reason: &str| AlbertError::NotDoubleRoot {
        lambda: lambda.as_f64(),
        reason: reason.to_owned(),
    };
    if shifted.norm() <= mtol * s {
        return Err(fail("A equals λI"));
    }
    if shifted.freudenthal_square().norm() > T::lit(4.0) * mtol * s * s {
        return Err(fail("Q_λ does not vanish"));
    }
    Ok(shifted)
}

/// Splits the eigenspace of a double root `λ` into two orthogonal primitive
/// idempotents.
///
/// With `A - λI = ±ww†` and `w = (x, y, r)`, the column
/// `v = (|y|², -y x̄, 0)` is orthogonal to `w`. When `|y|` is small the
/// coordinates are cyclically relabelled first. The pair is returned ordered
/// by pivot (largest diagonal) index.
pub fn double_root_split<T: Scalar>(
    a: &JordanMatrix<T>,
    lambda: T,
    tol: &Tolerances,
) -> Result<(JordanMatrix<T>, JordanMatrix<T>)> {
    let shifted = check_double(a, lambda, tol)?;
    let rank_one = if shifted.trace() < T::zero() {
        -shifted
    } else {
        shifted
    };
    let w = extract_vector(&rank_one, tol)?;
    let v = orthogonal_column(&w);
    let v1 = rank1_from_vector(&v, tol)?.scale(v.norm2().recip());
    let v2 = JordanMatrix::identity() - rank_one.scale(rank_one.trace().recip()) - v1;
    if pivot_index(&v2) < pivot_index(&v1) {
        Ok((v2, v1))
    } else {
        Ok((v1, v2))
    }
}

/// `(|y|², -y x̄, 0)` in the first cyclic relabelling `(x, y, r)` of `w`
/// with `|y|² >= |w|²/4`. Such a slot always exists.
pub(crate) fn orthogonal_column<T: Scalar>(w: &OctVector3<T>) -> OctVector3<T> {
    let total = w.norm2();
    let quarter = T::lit(0.25);
    let shift = (0..3)
        .find(|&s| w.0[(s + 1) % 3].norm2() >= quarter * total)
        .unwrap_or(0);
    let x = w.0[shift];
    let y = w.0[(shift + 1) % 3];
    let mut out = [Octonion::zero(); 3];
    out[shift] = Octonion::real(y.norm2());
    out[(shift + 1) % 3] = -(y * x.conj());
    OctVector3(out)
}

fn pivot_index<T: Scalar>(p: &JordanMatrix<T>) -> usize {
    let d = p.diagonal();
    let mut k = 0;
    for i in 1..3 {
        if d[i] > d[k] {
            k = i;
        }
    }
    k
}

/// `A = μ (A-λI)/tr(A-λI) - λ (A-λI)~/tr(A-λI)` for a double root `λ`,
/// with `μ = tr A - 2λ`.
pub fn invariant_double_decomposition<T: Scalar>(
    a: &JordanMatrix<T>,
    lambda: T,
    tol: &Tolerances,
) -> Result<InvariantSplit<T>> {
    let shifted = check_double(a, lambda, tol)?;
    let tr = shifted.trace();
    Ok(InvariantSplit {
        mu: a.trace() - T::lit(2.0) * lambda,
        primitive: shifted.scale(tr.recip()),
        lambda,
        complement: shifted.trace_reversal().scale(-tr.recip()),
    })
}

/// Orthogonal primitive idempotent decomposition `A = Σ λ_i P_i`.
pub fn decompose<T: Scalar>(
    a: &JordanMatrix<T>,
    tol: &Tolerances,
) -> Result<SpectralDecomposition<T>> {
    let roots = solve_char_poly(&a.char_poly(), tol)?;
    decompose_with_roots(a, &roots, tol)
}

/// [`decompose`] with the characteristic roots supplied by the caller.
pub fn decompose_with_roots<T: Scalar>(
    a: &JordanMatrix<T>,
    roots: &CubicRoots<T>,
    tol: &Tolerances,
) -> Result<SpectralDecomposition<T>> {
    let mut eigenvalues = roots.roots;
    let big = eigenvalues[0].abs().max(eigenvalues[2].abs());
    let gap = tol.mtol::<T>() * (T::one() + big);
    let s = scale_of(a, big);

    let idempotents: [JordanMatrix<T>; 3] = match roots.multiplicity {
        Multiplicity::Distinct => {
            let mut out = [JordanMatrix::zero(); 3];
            for (o, &l) in out.iter_mut().zip(eigenvalues.iter()) {
                let q = q_matrix(a, l, tol)?;
                *o = idempotent_from_q(&q, T::lit(0.5) * gap * gap).map_err(|_| {
                    AlbertError::Inconsistent(format!(
                        "cubic reports distinct roots but tr Q vanishes at {}",
                        l.as_f64()
                    ))
                })?;
            }
            out
        }
        Multiplicity::Double(lambda) => {
            let k = roots
                .simple_index()
                .expect("double root has a simple partner");
            let mu = eigenvalues[k];
            let q_lambda = q_matrix(a, lambda, tol)?;
            if q_lambda.trace().abs() > T::lit(4.0) * gap * s {
                return Err(AlbertError::Inconsistent(format!(
                    "cubic reports a double root at {} but tr Q = {:e}",
                    lambda.as_f64(),
                    q_lambda.trace().as_f64()
                )));
            }
            let p_mu = idempotent_from_q(&q_matrix(a, mu, tol)?, T::lit(0.5) * gap * gap)?;
            let (v1, v2) = double_root_split(a, lambda, tol)?;
            let mut pair = [v1, v2].into_iter();
            let mut out = [JordanMatrix::zero(); 3];
            for (i, o) in out.iter_mut().enumerate() {
                *o = if i == k {
                    p_mu
                } else {
                    pair.next().expect("two slots")
                };
            }
            out
        }
        Multiplicity::Triple(lambda) => {
            if a.shift(lambda).norm() > gap * s {
                return Err(AlbertError::Inconsistent(format!(
                    "triple root {} but A differs from λI by {:e}",
                    lambda.as_f64(),
                    a.shift(lambda).norm().as_f64()
                )));
            }
            // Report the median diagonal entry so that A = λI is reproduced
            // exactly rather than through tr(A)/3.
            let mut d = a.diagonal();
            d.sort_by(|x, y| x.partial_cmp(y).expect("finite diagonal"));
            eigenvalues = [d[1]; 3];
            [0, 1, 2].map(JordanMatrix::unit)
        }
    };

    let eigenvectors = [
        extract_vector(&idempotents[0], tol)?,
        extract_vector(&idempotents[1], tol)?,
        extract_vector(&idempotents[2], tol)?,
    ];
    let residuals = Residuals::measure(a, &eigenvalues, &idempotents);
    if residuals.reconstruction > tol.mtol::<T>() * (T::one() + a.norm()) {
        return Err(AlbertError::Inconsistent(format!(
            "reconstruction residual {:e}",
            residuals.reconstruction.as_f64()
        )));
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        idempotents,
        eigenvectors,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::cayley_plane_check;

    type O = Octonion<f64>;
    type J = JordanMatrix<f64>;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn ones_off_diagonal() -> J {
        J::new(0.0, 0.0, 0.0, O::one(), O::one(), O::one())
    }

    #[test]
    fn q_matrix_examples() {
        let q = q_matrix(&J::diag(1.0, 2.0, 3.0), 1.0, &tol()).unwrap();
        assert_eq!(q, J::diag(2.0, 0.0, 0.0));
        assert_eq!(q_matrix(&J::identity(), 1.0, &tol()).unwrap(), J::zero());
        let q = q_matrix(&ones_off_diagonal(), -1.0, &tol()).unwrap();
        assert!(q.norm() < 1e-14);
        assert!(matches!(
            q_matrix(&J::diag(1.0, 2.0, 3.0), 1.5, &tol()),
            Err(AlbertError::NotAnEigenvalue { .. })
        ));
    }

    #[test]
    fn idempotent_from_q_examples() {
        assert_eq!(
            idempotent_from_q(&J::diag(2.0, 0.0, 0.0), 1e-12).unwrap(),
            J::unit(0)
        );
        assert_eq!(
            idempotent_from_q(&J::unit(1).scale(5.0), 1e-12).unwrap(),
            J::unit(1)
        );
        assert!(matches!(
            idempotent_from_q(&J::zero(), 1e-12),
            Err(AlbertError::ZeroQMatrix { .. })
        ));
    }

    #[test]
    fn decompose_diagonal() {
        let d = decompose(&J::diag(1.0, 2.0, 3.0), &tol()).unwrap();
        for (x, y) in d.eigenvalues.iter().zip([3.0, 2.0, 1.0]) {
            assert!((x - y).abs() < 1e-14);
        }
        for (p, k) in d.idempotents.iter().zip([2, 1, 0]) {
            assert!((*p - J::unit(k)).norm() < 1e-14);
        }
    }

    #[test]
    fn decompose_identity() {
        let d = decompose(&J::identity(), &tol()).unwrap();
        assert_eq!(d.eigenvalues, [1.0; 3]);
        assert_eq!(d.idempotents, [J::unit(0), J::unit(1), J::unit(2)]);
        assert_eq!(d.residuals.reconstruction, 0.0);
    }

    #[test]
    fn decompose_ones_off_diagonal() {
        let a = ones_off_diagonal();
        let d = decompose(&a, &tol()).unwrap();
        assert!((d.eigenvalues[0] - 2.0).abs() < 1e-12);
        assert!((d.eigenvalues[1] + 1.0).abs() < 1e-12);
        assert!((d.eigenvalues[2] + 1.0).abs() < 1e-12);
        let expected = a.shift(-1.0).scale(1.0 / 3.0);
        assert!((d.idempotents[0] - expected).norm() < 1e-12);
        let r = d.residuals;
        assert!(r.max_eigen() < 1e-10 && r.max_orthogonality() < 1e-10);
        assert!(r.completeness < 1e-10 && r.reconstruction < 1e-10);
        for p in &d.idempotents {
            assert!(cayley_plane_check(p, 1e-10));
        }
    }

    #[test]
    fn split_diag_001() {
        let (v1, v2) = double_root_split(&J::diag(0.0, 0.0, 1.0), 0.0, &tol()).unwrap();
        assert_eq!(v1, J::unit(0));
        assert_eq!(v2, J::unit(1));
    }

    #[test]
    fn split_ones_off_diagonal() {
        let a = ones_off_diagonal();
        let (v1, v2) = double_root_split(&a, -1.0, &tol()).unwrap();
        // v ∝ (1, -1, 0): vv†/2.
        let v = OctVector3::from_reals([1.0, -1.0, 0.0]);
        let expect = v.outer().scale(0.5);
        let w = OctVector3::from_reals([1.0, 1.0, 1.0]);
        let rest = J::identity() - w.outer().scale(1.0 / 3.0) - expect;
        let got = [v1, v2];
        assert!(got.iter().any(|p| (*p - expect).norm() < 1e-14));
        assert!(got.iter().any(|p| (*p - rest).norm() < 1e-14));
        for p in &got {
            assert!(cayley_plane_check(p, 1e-12));
            assert!((a.jordan(p) - p.scale(-1.0)).norm() < 1e-12);
        }
        assert!(v1.jordan(&v2).norm() < 1e-14);
    }

    #[test]
    fn split_rejects_non_double() {
        assert!(matches!(
            double_root_split(&J::identity(), 1.0, &tol()),
            Err(AlbertError::NotDoubleRoot { .. })
        ));
        assert!(matches!(
            double_root_split(&J::diag(1.0, 2.0, 3.0), 1.0, &tol()),
            Err(AlbertError::NotDoubleRoot { .. })
        ));
    }

    #[test]
    fn invariant_split_examples() {
        let s = invariant_double_decomposition(&J::diag(0.0, 0.0, 1.0), 0.0, &tol()).unwrap();
        assert_eq!(s.mu, 1.0);
        assert_eq!(s.primitive, J::unit(2));
        assert_eq!(s.lambda, 0.0);
        assert_eq!(s.complement, J::diag(1.0, 1.0, 0.0));

        let a = ones_off_diagonal();
        let s = invariant_double_decomposition(&a, -1.0, &tol()).unwrap();
        let p = a.shift(-1.0).scale(1.0 / 3.0);
        assert_eq!(s.mu, 2.0);
        assert!((s.primitive - p).norm() < 1e-15);
        assert!((s.complement - (J::identity() - p)).norm() < 1e-15);
        assert!((s.complement.trace() - 2.0).abs() < 1e-15);
        assert!((s.complement.square() - s.complement).norm() < 1e-14);
        assert!((s.primitive.square() - s.primitive).norm() < 1e-14);
        let rebuilt = s.primitive.scale(s.mu) + s.complement.scale(s.lambda);
        assert!((rebuilt - a).norm() < 1e-14);
    }

    #[test]
    fn orthogonal_column_handles_zero_middle() {
        let w = OctVector3::from_reals([0.0, 0.0, 1.0]);
        let v = orthogonal_column(&w);
        assert!(v.norm2() > 0.0);
        assert!(v.inner(&w).norm() == 0.0);
        let w = OctVector3::new(O::basis(1), O::zero(), O::real(2.0));
        let v = orthogonal_column(&w);
        assert!(v.norm2() > 0.0);
        assert!(v.inner(&w).norm() < 1e-15);
    }
}
