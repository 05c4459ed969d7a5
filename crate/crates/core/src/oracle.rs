//! Real-matrix cross-check.
//!
//! The map `v ↦ Av` on octonionic 3-columns is a real-linear operator on
//! `R²⁴`, symmetric under `Re(v†w)`. Its eigenvalues are real but do not solve
//! the characteristic cubic; they satisfy `det(A - λI) + r = 0` for one of
//! two values of `r`, of opposite sign. The three Jordan eigenvalues sit at
//! `r = 0` between the two families.
//!
//! A quaternionic `A` only reaches `r = 0` on its own subspace `H³`. On the
//! complement `(Hℓ)³` it acts through the entrywise conjugate matrix, whose
//! determinant differs by a constant, so those eigenvalues sit at
//! `r = 2 Re(cab) - 2 Re(bac)`.

use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::jordan::JordanMatrix;
use crate::octonion::Octonion;
use crate::Scalar;

pub const DIM: usize = 24;
const MAX_SWEEPS: usize = 100;

/// Dense 24x24 real symmetric matrix, row-major. Coordinate `8i + k` is
/// coefficient `k` of octonion slot `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealSymmetric24<T> {
    entries: Vec<T>,
}

impl<T: Scalar> RealSymmetric24<T> {
    pub fn zeros() -> Self {
        Self {
            entries: vec![T::zero(); DIM * DIM],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            m.set(i, i, T::one());
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * DIM + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, x: T) {
        self.entries[i * DIM + j] = x;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn max_asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..DIM {
            for j in 0..i {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn frobenius(&self) -> T {
        self.entries.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), DIM);
        (0..DIM)
            .map(|i| (0..DIM).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

/// Matrix of `x ↦ a x` in the coefficient basis.
pub fn left_multiplication<T: Scalar>(a: &Octonion<T>) -> [[T; 8]; 8] {
    let mut out = [[T::zero(); 8]; 8];
    for j in 0..8 {
        let col = *a * Octonion::basis(j);
        for (i, row) in out.iter_mut().enumerate() {
            row[j] = col[i];
        }
    }
    out
}

/// Real matrix of `v ↦ Av`.
pub fn embed<T: Scalar>(a: &JordanMatrix<T>) -> RealSymmetric24<T> {
    let mut m = RealSymmetric24::zeros();
    for bi in 0..3 {
        for bj in 0..3 {
            let block = left_multiplication(&a.entry(bi, bj));
            for (i, row) in block.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    m.set(8 * bi + i, 8 * bj + j, x);
                }
            }
        }
    }
    m
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending.
pub fn symmetric_eigenvalues<T: Scalar>(m: &RealSymmetric24<T>) -> Result<Vec<T>> {
    jacobi_eigenvalues(m.entries.clone(), DIM)
}

fn jacobi_eigenvalues<T: Scalar>(mut a: Vec<T>, n: usize) -> Result<Vec<T>> {
    let norm = a.iter().map(|&x| x * x).sum::<T>().sqrt();
    let target = T::lit(1e-11).max(T::epsilon() * T::lit(64.0)) * norm;
    let off = |a: &[T]| -> T {
        let mut s = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (s + s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off_norm = off(&a);
        if off_norm <= target || norm == T::zero() {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(AlbertError::NoConvergence {
                sweeps,
                off_norm: off_norm.as_f64(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (T::lit(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(ev)
}

/// Row-major matrix of `v ↦ Av` restricted to columns whose entries lie in
/// the span of `basis`, which must be orthonormal and closed under left
/// multiplication by the entries of `A` (a subalgebra containing them).
pub fn embed_in<T: Scalar>(a: &JordanMatrix<T>, basis: &[Octonion<T>]) -> Vec<T> {
    let k = basis.len();
    let n = 3 * k;
    let mut out = vec![T::zero(); n * n];
    for bi in 0..3 {
        for bj in 0..3 {
            let entry = a.entry(bi, bj);
            for (j, ej) in basis.iter().enumerate() {
                let image = entry * *ej;
                for (i, ei) in basis.iter().enumerate() {
                    out[(k * bi + i) * n + k * bj + j] = ei.dot(&image);
                }
            }
        }
    }
    out
}

/// Groups sorted values into runs whose consecutive gaps are at most
/// `rel_gap` times the total range. Returns `(mean, count)` per group.
pub fn cluster<T: Scalar>(sorted: &[T], rel_gap: T) -> Vec<(T, usize)> {
    let Some((&first, _)) = sorted.split_first() else {
        return Vec::new();
    };
    let range = *sorted.last().expect("non-empty") - first;
    let gap = rel_gap * range;
    let mut out: Vec<(T, usize)> = Vec::new();
    let mut sum = first;
    let mut count = 1;
    for w in sorted.windows(2) {
        if w[1] - w[0] > gap {
            out.push((sum / T::lit(count as f64), count));
            sum = T::zero();
            count = 0;
        }
        sum += w[1];
        count += 1;
    }
    out.push((sum / T::lit(count as f64), count));
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cluster<T> {
    pub lambda: T,
    pub mult: usize,
    /// `-det(A - λI)`.
    pub r: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport<T> {
    pub clusters: Vec<Cluster<T>>,
    pub pass: bool,
}

impl<T: Scalar> OracleReport<T> {
    pub fn distinct_eigenvalues(&self) -> usize {
        self.clusters.len()
    }

    /// Whether every cluster has a multiplicity divisible by four.
    pub fn multiplicities_divisible_by_four(&self) -> bool {
        self.clusters.iter().all(|c| c.mult % 4 == 0)
    }

    /// The `r` values grouped with an absolute gap of `spread`; returns
    /// `(mean, min, max)` per group.
    pub fn r_groups(&self, spread: T) -> Vec<(T, T, T)> {
        let mut r: Vec<T> = self.clusters.iter().map(|c| c.r).collect();
        r.sort_by(|x, y| x.partial_cmp(y).expect("finite r"));
        let mut out: Vec<(T, T, T)> = Vec::new();
        for &x in &r {
            match out.last_mut() {
                Some((_, lo, hi)) if x - *lo <= spread => *hi = x,
                _ => out.push((x, x, x)),
            }
        }
        for g in out.iter_mut() {
            let members: Vec<T> = r
                .iter()
                .copied()
                .filter(|&x| x >= g.1 && x <= g.2)
                .collect();
            g.0 = members.iter().copied().sum::<T>() / T::lit(members.len() as f64);
        }
        out
    }
}

/// Spectrum clustering gap, relative to the spectral range.
pub const CLUSTER_GAP: f64 = 1e-6;
/// Allowed spread of one `r` family, relative to `(1 + ‖A‖)³`.
pub const R_SPREAD: f64 = 1e-6;
/// Magnitude below which an `r` value counts as zero, relative to `(1 + ‖A‖)³`.
pub const R_ZERO: f64 = 1e-8;

/// Computes `r_i = -det(A - λ_i I)` for every clustered eigenvalue of
/// [`embed`]`(A)` and passes when they collapse onto at most two values
/// `r₊ >= 0 >= r₋`.
pub fn modified_char_check<T: Scalar>(a: &JordanMatrix<T>) -> Result<OracleReport<T>> {
    let ev = symmetric_eigenvalues(&embed(a))?;
    Ok(report(a, &ev))
}

/// [`modified_char_check`] on the invariant subspace of columns with entries
/// in the subalgebra spanned by `basis` (see [`embed_in`]). For a quaternionic
/// `A` and its own quaternionic basis this is the associative case, where
/// every `r_i` vanishes.
pub fn modified_char_check_in<T: Scalar>(
    a: &JordanMatrix<T>,
    basis: &[Octonion<T>],
) -> Result<OracleReport<T>> {
    let ev = jacobi_eigenvalues(embed_in(a, basis), 3 * basis.len())?;
    Ok(report(a, &ev))
}

fn report<T: Scalar>(a: &JordanMatrix<T>, ev: &[T]) -> OracleReport<T> {
    let clusters: Vec<Cluster<T>> = cluster(ev, T::lit(CLUSTER_GAP))
        .into_iter()
        .map(|(lambda, mult)| Cluster {
            lambda,
            mult,
            r: -a.shift(lambda).det(),
        })
        .collect();
    let s = (T::one() + a.norm()).powi(3);
    let mut report = OracleReport {
        clusters,
        pass: false,
    };
    let groups = report.r_groups(T::lit(R_SPREAD) * s);
    let zero = T::lit(R_ZERO) * s;
    let lo = groups.first().map(|g| g.1).unwrap_or(T::zero());
    let hi = groups.last().map(|g| g.2).unwrap_or(T::zero());
    report.pass = groups.len() <= 2 && lo <= zero && hi >= -zero;
    report
}
