//! Octonion arithmetic on the basis `{1, e1, ..., e7}`.
//!
//! The multiplication table comes from Cayley–Dickson doubling of the
//! quaternions `H = span{1, e1, e2, e3}` with `e4` the doubling unit and
//! `e_{4+k} = e_k e4`, using the product
//!
//! ```text
//! (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
//! ```
//!
//! The resulting integer table is frozen in [`PRODUCT_INDEX`] and
//! [`PRODUCT_SIGN`]: `e_i e_j = PRODUCT_SIGN[i][j] * e_{PRODUCT_INDEX[i][j]}`.

use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::tolerance::Tolerances;
use crate::Scalar;

pub const PRODUCT_INDEX: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 0, 1, 6, 7, 4, 5],
    [3, 2, 1, 0, 7, 6, 5, 4],
    [4, 5, 6, 7, 0, 1, 2, 3],
    [5, 4, 7, 6, 1, 0, 3, 2],
    [6, 7, 4, 5, 2, 3, 0, 1],
    [7, 6, 5, 4, 3, 2, 1, 0],
];

pub const PRODUCT_SIGN: [[i8; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1, -1, -1, 1],
    [1, -1, -1, 1, 1, 1, -1, -1],
    [1, 1, -1, -1, 1, -1, 1, -1],
    [1, -1, -1, -1, -1, 1, 1, 1],
    [1, 1, -1, 1, -1, -1, -1, 1],
    [1, 1, 1, -1, -1, 1, -1, -1],
    [1, -1, 1, 1, -1, -1, 1, -1],
];

/// An octonion `c0 + c1 e1 + ... + c7 e7`.
///
/// Serialized as a bare array of its eight coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion<T> {
    c: [T; 8],
}

impl<T: Scalar> Octonion<T> {
    #[inline]
    pub const fn new(c: [T; 8]) -> Self {
        Self { c }
    }

    #[inline]
    pub fn zero() -> Self {
        Self { c: [T::zero(); 8] }
    }

    #[inline]
    pub fn one() -> Self {
        Self::real(T::one())
    }

    #[inline]
    pub fn real(x: T) -> Self {
        let mut c = [T::zero(); 8];
        c[0] = x;
        Self { c }
    }

    /// Basis unit `e_i`, with `e_0 = 1`.
    ///
    /// # Panics
    /// If `i > 7`.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "octonion basis index {i} out of range");
        let mut c = [T::zero(); 8];
        c[i] = T::one();
        Self { c }
    }

    #[inline]
    pub fn coeffs(&self) -> &[T; 8] {
        &self.c
    }

    #[inline]
    pub fn into_coeffs(self) -> [T; 8] {
        self.c
    }

    pub fn conj(&self) -> Self {
        let mut c = self.c.map(|x| -x);
        c[0] = self.c[0];
        Self { c }
    }

    /// Real part, `(x + conj x) / 2`.
    #[inline]
    pub fn re(&self) -> T {
        self.c[0]
    }

    /// Imaginary part `x - re(x)`.
    pub fn im(&self) -> Self {
        let mut c = self.c;
        c[0] = T::zero();
        Self { c }
    }

    #[inline]
    pub fn norm2(&self) -> T {
        self.c.iter().map(|&x| x * x).sum()
    }

    #[inline]
    pub fn norm(&self) -> T {
        self.norm2().sqrt()
    }

    /// Euclidean inner product of the coefficient vectors, `Re(x conj(y))`.
    pub fn dot(&self, other: &Self) -> T {
        self.c
            .iter()
            .zip(other.c.iter())
            .map(|(&a, &b)| a * b)
            .sum()
    }

    pub fn inv(&self) -> Result<Self> {
        let n2 = self.norm2();
        if n2 == T::zero() {
            return Err(AlbertError::DivisionByZero);
        }
        Ok(self.conj() * n2.recip())
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            c: self.c.map(|x| x * s),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Tolerance-based equality: `|x - y| <= atol + rtol * max(|x|, |y|)`.
    pub fn approx_eq(&self, other: &Self, tol: &Tolerances) -> bool {
        let diff = (*self - *other).norm();
        tol.within(diff, self.norm().max(other.norm()))
    }

    /// Converts the coefficients to another scalar width.
    pub fn cast<U: Scalar>(&self) -> Octonion<U> {
        Octonion {
            c: self.c.map(|x| U::lit(x.as_f64())),
        }
    }
}

/// `(xy)z - x(yz)`.
pub fn associator<T: Scalar>(x: &Octonion<T>, y: &Octonion<T>, z: &Octonion<T>) -> Octonion<T> {
    (*x * *y) * *z - *x * (*y * *z)
}

impl<T> Index<usize> for Octonion<T> {
    type Output = T;

    #[inline]
    fn index(&self, i: usize) -> &T {
        &self.c[i]
    }
}

impl<T: Scalar> From<T> for Octonion<T> {
    fn from(x: T) -> Self {
        Self::real(x)
    }
}

impl<T: Scalar> Add for Octonion<T> {
    type Output = Self;

    #[inline]
    fn add(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c) {
            *a += b;
        }
        Self { c }
    }
}

impl<T: Scalar> AddAssign for Octonion<T> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Scalar> Sub for Octonion<T> {
    type Output = Self;

    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c) {
            *a -= b;
        }
        Self { c }
    }
}

impl<T: Scalar> SubAssign for Octonion<T> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Scalar> Neg for Octonion<T> {
    type Output = Self;

    #[inline]
    fn neg(self) -> Self {
        Self {
            c: self.c.map(|x| -x),
        }
    }
}

impl<T: Scalar> Mul for Octonion<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = [T::zero(); 8];
        for i in 0..8 {
            let xi = self.c[i];
            if xi.is_zero() {
                continue;
            }
            for j in 0..8 {
                let term = xi * rhs.c[j];
                let k = PRODUCT_INDEX[i][j];
                if PRODUCT_SIGN[i][j] > 0 {
                    out[k] += term;
                } else {
                    out[k] -= term;
                }
            }
        }
        Self { c: out }
    }
}

impl<T: Scalar> Mul<T> for Octonion<T> {
    type Output = Self;

    #[inline]
    fn mul(self, rhs: T) -> Self {
        self.scale(rhs)
    }
}

impl<T: Scalar> Div<T> for Octonion<T> {
    type Output = Self;

    #[inline]
    fn div(self, rhs: T) -> Self {
        self.scale(rhs.recip())
    }
}
