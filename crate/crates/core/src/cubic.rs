//! Real roots of the characteristic cubic `λ³ - tλ² + sλ - d = 0`.
//!
//! Jordan matrices always have three real eigenvalues, so the trigonometric
//! (Viète) form is used throughout. Roots closer than
//! `mtol * (1 + max |λ|)` are merged and reported at their mean.

use serde::{Deserialize, Serialize};

use crate::error::{AlbertError, Result};
use crate::jordan::CharPoly;
use crate::tolerance::Tolerances;
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "root")]
pub enum Multiplicity<T> {
    Distinct,
    Double(T),
    Triple(T),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicRoots<T> {
    /// Sorted descending.
    pub roots: [T; 3],
    pub multiplicity: Multiplicity<T>,
}

impl<T: Scalar> CubicRoots<T> {
    /// `(|Σλ - t|, |Σλλ - s|, |Πλ - d|)`.
    pub fn vieta_residuals(&self, t: T, s: T, d: T) -> [T; 3] {
        let [x, y, z] = self.roots;
        [
            (x + y + z - t).abs(),
            (x * y + y * z + x * z - s).abs(),
            (x * y * z - d).abs(),
        ]
    }

    /// Index of the unrepeated root when the multiplicity is `Double`.
    pub fn simple_index(&self) -> Option<usize> {
        match self.multiplicity {
            Multiplicity::Double(l) => (0..3).find(|&i| self.roots[i] != l),
            _ => None,
        }
    }
}

pub fn solve_char_poly<T: Scalar>(cp: &CharPoly<T>, tol: &Tolerances) -> Result<CubicRoots<T>> {
    solve_characteristic(cp.trace, cp.sigma, cp.det, tol)
}

pub fn solve_characteristic<T: Scalar>(
    t: T,
    s: T,
    d: T,
    tol: &Tolerances,
) -> Result<CubicRoots<T>> {
    let zero = T::zero();
    let one = T::one();
    let two = T::lit(2.0);
    let three = T::lit(3.0);

    // λ = x + t/3 gives x³ + p x + q = 0.
    let shift = t / three;
    let p = s - t * t / three;
    let q = -two * t * t * t / T::lit(27.0) + t * s / three - d;

    let scale = t.abs().max(s.abs().sqrt()).max(d.abs().cbrt());
    if scale == zero {
        return Ok(CubicRoots {
            roots: [zero; 3],
            multiplicity: Multiplicity::Triple(zero),
        });
    }
    let mtol = tol.mtol::<T>();

    // Σ(λ_i - t/3)² = -2p, so real roots force p <= 0.
    if p > tol.rtol::<T>() * scale * scale {
        return Err(AlbertError::ComplexRoots {
            discriminant: (-p / (scale * scale)).as_f64(),
        });
    }
    let spread = (-two * p).max(zero).sqrt();
    if spread <= mtol * (one + shift.abs() + spread) {
        let slack = tol.rtol::<T>() * scale * scale * scale;
        if q.abs() > spread * spread * spread + slack {
            return Err(AlbertError::ComplexRoots {
                discriminant: (-(q / scale.powi(3)).powi(2)).as_f64(),
            });
        }
        return Ok(CubicRoots {
            roots: [shift; 3],
            multiplicity: Multiplicity::Triple(shift),
        });
    }

    // Normalized discriminant 1 - arg² >= 0 for three real roots.
    let amp = (-p / three).sqrt();
    let arg = q / (two * p * amp) * three;
    let excess = arg * arg - one;
    if excess > zero {
        let allowed = T::lit(1e-12) + tol.rtol::<T>() * (scale * scale / (-p)).powf(T::lit(1.5));
        if excess > allowed {
            return Err(AlbertError::ComplexRoots {
                discriminant: (-excess).as_f64(),
            });
        }
    }
    let theta = arg.max(-one).min(one).acos() / three;
    let third = T::lit(2.0) * T::PI() / three;
    let mut roots = [
        two * amp * theta.cos() + shift,
        two * amp * (theta - third).cos() + shift,
        two * amp * (theta - two * third).cos() + shift,
    ];
    roots.sort_by(|a, b| b.partial_cmp(a).expect("finite roots"));

    let merge = mtol * (one + roots[0].abs().max(roots[2].abs()));
    let close01 = roots[0] - roots[1] <= merge;
    let close12 = roots[1] - roots[2] <= merge;
    let cp = CharPoly {
        trace: t,
        sigma: s,
        det: d,
    };
    let multiplicity = match (close01, close12) {
        (true, true) => {
            let mean = (roots[0] + roots[1] + roots[2]) / three;
            roots = [mean; 3];
            Multiplicity::Triple(mean)
        }
        (true, false) => {
            let mean = (roots[0] + roots[1]) / two;
            roots[2] = polish(&cp, roots[2]);
            roots[0] = mean;
            roots[1] = mean;
            Multiplicity::Double(mean)
        }
        (false, true) => {
            let mean = (roots[1] + roots[2]) / two;
            roots[0] = polish(&cp, roots[0]);
            roots[1] = mean;
            roots[2] = mean;
            Multiplicity::Double(mean)
        }
        (false, false) => {
            for r in roots.iter_mut() {
                *r = polish(&cp, *r);
            }
            Multiplicity::Distinct
        }
    };
    roots.sort_by(|a, b| b.partial_cmp(a).expect("finite roots"));
    Ok(CubicRoots {
        roots,
        multiplicity,
    })
}

/// Newton steps on the characteristic polynomial, kept only while they
/// reduce the residual.
fn polish<T: Scalar>(cp: &CharPoly<T>, mut x: T) -> T {
    let mut f = eval_compensated(cp, x);
    for _ in 0..3 {
        let df = (T::lit(3.0) * x - T::lit(2.0) * cp.trace) * x + cp.sigma;
        if f == T::zero() || df == T::zero() {
            break;
        }
        let y = x - f / df;
        let fy = eval_compensated(cp, y);
        if fy.abs() >= f.abs() {
            break;
        }
        x = y;
        f = fy;
    }
    x
}

/// Compensated Horner evaluation, accurate to about twice working precision.
fn eval_compensated<T: Scalar>(cp: &CharPoly<T>, x: T) -> T {
    let coeffs = [-cp.trace, cp.sigma, -cp.det];
    let mut s = T::one();
    let mut c = T::zero();
    for &a in &coeffs {
        let p = s * x;
        let p_err = s.mul_add(x, -p);
        let t = p + a;
        let z = t - p;
        let t_err = (p - (t - z)) + (a - z);
        s = t;
        c = c.mul_add(x, p_err + t_err);
    }
    s + c
}
