//! Random test inputs.
//!
//! General samples draw every diagonal entry and every octonion coefficient
//! uniformly from `[-1, 1]`. The structured generators build matrices with a
//! prescribed spectrum by conjugating a diagonal matrix with random
//! reflections, each of which is an automorphism of the Jordan product.

use rand::Rng;

use crate::f4::f4_conjugate;
use crate::jordan::{JordanMatrix, OctVector3};
use crate::octonion::Octonion;
use crate::Scalar;

fn uniform<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    T::lit(rng.gen_range(-1.0..=1.0))
}

pub fn random_octonion<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Octonion<T> {
    let mut c = [T::zero(); 8];
    for x in c.iter_mut() {
        *x = uniform(rng);
    }
    Octonion::new(c)
}

pub fn random_jordan<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> JordanMatrix<T> {
    JordanMatrix {
        p: uniform(rng),
        m: uniform(rng),
        n: uniform(rng),
        a: random_octonion(rng),
        b: random_octonion(rng),
        c: random_octonion(rng),
    }
}

/// Orthonormal basis `{1, i, j, ij}` of a random quaternionic subalgebra.
#[derive(Clone, Copy, Debug)]
pub struct QuaternionFrame<T> {
    pub basis: [Octonion<T>; 4],
}

impl<T: Scalar> QuaternionFrame<T> {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let i = unit_imaginary(rng);
        let j = loop {
            let raw = random_octonion::<T, R>(rng).im();
            let ortho = raw - i * raw.dot(&i);
            let n = ortho.norm();
            if n > T::lit(1e-3) {
                break ortho / n;
            }
        };
        Self {
            basis: [Octonion::one(), i, j, i * j],
        }
    }

    /// Element with uniform `[-1, 1]` coordinates in this frame.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Octonion<T> {
        self.basis
            .iter()
            .fold(Octonion::zero(), |acc, b| acc + *b * uniform::<T, R>(rng))
    }

    pub fn sample_vector<R: Rng + ?Sized>(&self, rng: &mut R) -> OctVector3<T> {
        OctVector3::new(self.sample(rng), self.sample(rng), self.sample(rng))
    }

    /// Jordan matrix whose entries all lie in this subalgebra.
    pub fn sample_jordan<R: Rng + ?Sized>(&self, rng: &mut R) -> JordanMatrix<T> {
        JordanMatrix {
            p: uniform(rng),
            m: uniform(rng),
            n: uniform(rng),
            a: self.sample(rng),
            b: self.sample(rng),
            c: self.sample(rng),
        }
    }
}

fn unit_imaginary<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Octonion<T> {
    loop {
        let x = random_octonion::<T, R>(rng).im();
        let n = x.norm();
        if n > T::lit(1e-3) {
            return x / n;
        }
    }
}

/// Element `x + y u` of the complex subalgebra spanned by a random unit `u`.
pub fn random_complex<T: Scalar, R: Rng + ?Sized>(rng: &mut R, u: &Octonion<T>) -> Octonion<T> {
    Octonion::real(uniform(rng)) + *u * uniform::<T, R>(rng)
}

pub fn random_complex_unit<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Octonion<T> {
    unit_imaginary(rng)
}

pub fn random_quaternionic_vector<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> OctVector3<T> {
    QuaternionFrame::random(rng).sample_vector(rng)
}

/// Hermitian reflection acting on slots `i < j`:
/// `[[-r, x], [x̄, r]] / N` with `N² = |x|² + r²`, identity on the third slot.
pub fn reflection<T: Scalar>(i: usize, j: usize, x: Octonion<T>, r: T) -> JordanMatrix<T> {
    assert!(i < j && j < 3, "reflection slots must satisfy i < j < 3");
    let norm = (x.norm2() + r * r).sqrt();
    let mut d = [T::one(); 3];
    d[i] = -r / norm;
    d[j] = r / norm;
    let mut out = JordanMatrix::diag(d[0], d[1], d[2]);
    let x = x / norm;
    match (i, j) {
        (0, 1) => out.a = x,
        (1, 2) => out.c = x,
        // (0, 2) entry is b̄.
        _ => out.b = x.conj(),
    }
    out
}

/// Applies `count` random reflections in turn, each one an F4 automorphism.
pub fn random_f4_conjugation<T: Scalar, R: Rng + ?Sized>(
    a: &JordanMatrix<T>,
    rng: &mut R,
    count: usize,
) -> JordanMatrix<T> {
    const SLOTS: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];
    let mut out = *a;
    for k in 0..count {
        let (i, j) = SLOTS[k % 3];
        let m = reflection(i, j, random_octonion(rng), uniform(rng));
        out = f4_conjugate(&m, &out);
    }
    out
}

/// Octonionic Jordan matrix with eigenvalues `spectrum`.
pub fn with_spectrum<T: Scalar, R: Rng + ?Sized>(spectrum: [T; 3], rng: &mut R) -> JordanMatrix<T> {
    let d = JordanMatrix::diag(spectrum[0], spectrum[1], spectrum[2]);
    random_f4_conjugation(&d, rng, 6)
}

/// `λ I ± w w†` with random `λ` and quaternionic `w`: `λ` is a double root.
pub fn double_root_matrix<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> (JordanMatrix<T>, T) {
    let lambda: T = uniform(rng);
    let w = random_quaternionic_vector::<T, R>(rng);
    let sign = if rng.gen_bool(0.5) {
        T::one()
    } else {
        -T::one()
    };
    (
        JordanMatrix::identity().scale(lambda) + w.outer().scale(sign),
        lambda,
    )
}
