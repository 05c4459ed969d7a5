//! General (not necessarily Hermitian) 3x3 octonionic matrices.
//!
//! Only used internally to form raw products such as `AB` before they are
//! symmetrized back into the Albert algebra. Multiplication order inside each
//! entry is always `row entry * column entry`.

use crate::jordan::JordanMatrix;
use crate::octonion::Octonion;
use crate::Scalar;

#[derive(Clone, Copy, Debug)]
pub(crate) struct OctMatrix3<T> {
    pub(crate) e: [[Octonion<T>; 3]; 3],
}

impl<T: Scalar> OctMatrix3<T> {
    pub(crate) fn from_jordan(a: &JordanMatrix<T>) -> Self {
        let mut e = [[Octonion::zero(); 3]; 3];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a.entry(i, j);
            }
        }
        Self { e }
    }

    pub(crate) fn mul(&self, rhs: &Self) -> Self {
        let mut e = [[Octonion::zero(); 3]; 3];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let mut acc = Octonion::zero();
                for k in 0..3 {
                    acc += self.e[i][k] * rhs.e[k][j];
                }
                *x = acc;
            }
        }
        Self { e }
    }

    pub(crate) fn add(&self, rhs: &Self) -> Self {
        let mut e = self.e;
        for (row, rrow) in e.iter_mut().zip(rhs.e.iter()) {
            for (x, y) in row.iter_mut().zip(rrow.iter()) {
                *x += *y;
            }
        }
        Self { e }
    }

    /// Projects onto the Hermitian part, averaging each off-diagonal pair.
    pub(crate) fn hermitian_part(&self) -> JordanMatrix<T> {
        let half = T::lit(0.5);
        let e = &self.e;
        JordanMatrix {
            p: e[0][0].re(),
            m: e[1][1].re(),
            n: e[2][2].re(),
            a: (e[0][1] + e[1][0].conj()) * half,
            b: (e[2][0] + e[0][2].conj()) * half,
            c: (e[1][2] + e[2][1].conj()) * half,
        }
    }

    #[cfg(test)]
    /// Frobenius norm of `self - self^dagger`.
    pub(crate) fn anti_hermitian_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                s += (self.e[i][j] - self.e[j][i].conj()).norm2();
            }
        }
        s.sqrt()
    }
}
