//! Randomized verification of every identity class.
//!
//! Sample `i` draws from a ChaCha8 stream `i` under the run seed, so each
//! sample is reproducible on its own and independent of scheduling. Results
//! are combined only through maxima and integer counts, both exact and
//! order independent, which keeps the report byte-identical across runs.

use albert_core::dirac::OctVector2;
use albert_core::eigen::{double_root_split, invariant_double_decomposition};
use albert_core::sampling::{
    double_root_matrix, random_complex, random_complex_unit, random_jordan, random_octonion,
    with_spectrum, QuaternionFrame,
};
use albert_core::{
    classify_psquare, decompose, diagonalize, dirac_solve, f4_conjugate, modified_char_check,
    modified_char_check_in, psi_pack, solve_char_poly, Jordan64, Multiplicity, Octonion64,
    PSquareClass, Tolerances,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Largest normalized residual over all samples.
    Max,
    /// Number of samples that failed outright.
    Count,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub kind: CheckKind,
    pub value: f64,
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub count: usize,
    pub tolerances: Tolerances,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

use CheckKind::{Count, Max};

/// `(name, kind, threshold)`; the index is the slot in a sample's measurements.
const CHECKS: [(&str, CheckKind, f64); 40] = [
    ("octonion.alternativity", Max, 1e-12),
    ("octonion.moufang", Max, 1e-10),
    ("octonion.norm_composition", Max, 1e-12),
    ("jordan.jordan_identity", Max, 1e-10),
    ("jordan.characteristic_equation", Max, 1e-9),
    ("jordan.springer", Max, 1e-9),
    ("jordan.trace_reversed_identity", Max, 1e-9),
    ("jordan.polarized_closure", Max, 1e-9),
    ("jordan.det_forms", Max, 1e-10),
    ("jordan.transition_probability", Max, 1e-10),
    ("cubic.complex_roots", Count, 0.0),
    ("cubic.vieta", Max, 1e-10),
    ("eigen.errors", Count, 0.0),
    ("eigen.eigen_residual", Max, 1e-8),
    ("eigen.orthogonality", Max, 1e-8),
    ("eigen.completeness", Max, 1e-8),
    ("eigen.reconstruction", Max, 1e-8),
    ("eigen.cayley_plane", Max, 1e-8),
    ("eigen.associator", Max, 1e-8),
    ("eigen.double.errors", Count, 0.0),
    ("eigen.double.eigen_residual", Max, 1e-8),
    ("eigen.double.orthogonality", Max, 1e-8),
    ("eigen.double.consistency", Max, 1e-8),
    ("eigen.perturbation.not_distinct", Count, 0.0),
    ("eigen.perturbation.ratio", Max, 10.0),
    ("f4.errors", Count, 0.0),
    ("f4.invariants", Max, 1e-9),
    ("f4.residual", Max, 1e-8),
    ("f4.diagonal_vs_roots", Max, 1e-8),
    ("oracle.errors", Count, 0.0),
    ("oracle.fail", Count, 0.0),
    ("oracle.distinct_eigenvalues", Max, 6.0),
    ("oracle.jordan_roots", Max, 1e-8),
    ("oracle.quaternionic_r", Max, 1e-8),
    ("dirac.errors", Count, 0.0),
    ("dirac.round_trip", Max, 1e-10),
    ("dirac.solution", Max, 1e-10),
    ("dirac.packed_square", Max, 1e-9),
    ("psquare.class_mismatch", Count, 0.0),
    ("psquare.f4_class_change", Count, 0.0),
];

fn slot(name: &str) -> usize {
    CHECKS
        .iter()
        .position(|c| c.0 == name)
        .unwrap_or_else(|| panic!("unknown check {name}"))
}

struct Measurements([f64; CHECKS.len()]);

impl Measurements {
    fn new() -> Self {
        Self([0.0; CHECKS.len()])
    }

    fn record(&mut self, name: &str, value: f64) {
        let k = slot(name);
        let v = if value.is_nan() { f64::INFINITY } else { value };
        self.0[k] = match CHECKS[k].1 {
            Max => self.0[k].max(v),
            Count => self.0[k] + v,
        };
    }

    fn fail(&mut self, name: &str) {
        self.record(name, 1.0);
    }

    fn merge(mut self, other: Self) -> Self {
        for (k, v) in other.0.iter().enumerate() {
            self.0[k] = match CHECKS[k].1 {
                Max => self.0[k].max(*v),
                Count => self.0[k] + v,
            };
        }
        self
    }
}

/// Runs `count` samples from `seed`, in parallel.
pub fn verify(seed: u64, count: usize, tol: &Tolerances) -> VerifyReport {
    let totals = (0..count)
        .into_par_iter()
        .map(|i| sample(seed, i as u64, tol))
        .reduce(Measurements::new, Measurements::merge);
    let checks: Vec<CheckResult> = CHECKS
        .iter()
        .zip(totals.0)
        .map(|(&(name, kind, threshold), value)| CheckResult {
            name: name.to_owned(),
            kind,
            value,
            threshold,
            pass: value <= threshold,
        })
        .collect();
    let pass = checks.iter().all(|c| c.pass);
    VerifyReport {
        seed,
        count,
        tolerances: *tol,
        checks,
        pass,
    }
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn sample(seed: u64, index: u64, tol: &Tolerances) -> Measurements {
    let mut rng = rng_for(seed, index);
    let mut m = Measurements::new();
    octonion_checks(&mut rng, &mut m);
    let a: Jordan64 = random_jordan(&mut rng);
    jordan_checks(&a, &mut rng, &mut m);
    spectral_checks(&a, tol, &mut m);
    double_root_checks(&mut rng, tol, &mut m);
    f4_checks(&a, tol, &mut m);
    oracle_checks(&a, &mut rng, tol, &mut m);
    dirac_checks(&mut rng, tol, &mut m);
    psquare_checks(index, &mut rng, tol, &mut m);
    m
}

fn octonion_checks(rng: &mut ChaCha8Rng, m: &mut Measurements) {
    let x: Octonion64 = random_octonion(rng);
    let y: Octonion64 = random_octonion(rng);
    let z: Octonion64 = random_octonion(rng);
    let s = x.norm2() * y.norm().max(1.0);
    m.record(
        "octonion.alternativity",
        ((x * x) * y - x * (x * y)).norm() / s,
    );
    m.record(
        "octonion.alternativity",
        ((y * x) * x - y * (x * x)).norm() / s,
    );
    let mag = x.norm2() * y.norm() * z.norm();
    m.record(
        "octonion.moufang",
        (((x * y) * x) * z - x * (y * (x * z))).norm() / mag,
    );
    let n = x.norm2() * y.norm2();
    m.record("octonion.norm_composition", ((x * y).norm2() - n).abs() / n);
}

fn jordan_checks(a: &Jordan64, rng: &mut ChaCha8Rng, m: &mut Measurements) {
    let b: Jordan64 = random_jordan(rng);
    let s = 1.0 + a.norm();
    let a2 = a.square();
    let ji = a.jordan(&b).jordan(&a2) - a.jordan(&b.jordan(&a2));
    m.record(
        "jordan.jordan_identity",
        ji.norm() / (s.powi(3) * (1.0 + b.norm())),
    );

    let cp = a.char_poly();
    let ce = a.cube() - a2.scale(cp.trace) + a.scale(cp.sigma) - Jordan64::identity().scale(cp.det);
    m.record(
        "jordan.characteristic_equation",
        ce.norm() / (1.0 + a.norm().powi(3)),
    );

    let aa = a.freudenthal_square();
    m.record(
        "jordan.springer",
        (aa.freudenthal_square() - a.scale(cp.det)).norm() / s.powi(4),
    );
    let at = a.trace_reversal();
    let tr = at.jordan(a).jordan(&aa) - at.scale(cp.det);
    m.record("jordan.trace_reversed_identity", tr.norm() / s.powi(4));
    m.record(
        "jordan.det_forms",
        (cp.det - a.det_trace_form()).abs() / s.powi(3),
    );

    let frame = QuaternionFrame::<f64>::random(rng);
    let u = frame.sample_vector(rng);
    let w = frame.sample_vector(rng);
    let (uu, ww) = (u.outer(), w.outer());
    let uw = uu.freudenthal(&ww);
    let scale = (1.0 + uu.norm() + ww.norm()).powi(4);
    m.record(
        "jordan.polarized_closure",
        uw.freudenthal_square().norm() / scale,
    );
    let lhs = (u.inner(&w) * w.inner(&u)).re();
    m.record(
        "jordan.transition_probability",
        (lhs - uu.jordan(&ww).trace()).abs(),
    );
}

fn spectral_checks(a: &Jordan64, tol: &Tolerances, m: &mut Measurements) {
    let cp = a.char_poly();
    let s = 1.0 + a.norm();
    match solve_char_poly(&cp, tol) {
        Ok(roots) => {
            for v in roots.vieta_residuals(cp.trace, cp.sigma, cp.det) {
                m.record("cubic.vieta", v / s.powi(3));
            }
        }
        Err(_) => m.fail("cubic.complex_roots"),
    }
    let Ok(d) = decompose(a, tol) else {
        m.fail("eigen.errors");
        return;
    };
    let r = d.residuals;
    m.record("eigen.eigen_residual", r.max_eigen() / s);
    m.record("eigen.orthogonality", r.max_orthogonality());
    m.record("eigen.completeness", r.completeness / s);
    m.record("eigen.reconstruction", r.reconstruction / s);
    m.record("eigen.associator", r.max_associator());
    for p in &d.idempotents {
        let cayley = (p.square() - *p).norm().max((p.trace() - 1.0).abs());
        m.record("eigen.cayley_plane", cayley);
    }
}

fn double_root_checks(rng: &mut ChaCha8Rng, tol: &Tolerances, m: &mut Measurements) {
    let (a, lambda) = double_root_matrix::<f64, _>(rng);
    let s = 1.0 + a.norm();
    let (Ok((v1, v2)), Ok(inv)) = (
        double_root_split(&a, lambda, tol),
        invariant_double_decomposition(&a, lambda, tol),
    ) else {
        m.fail("eigen.double.errors");
        return;
    };
    for v in [&v1, &v2] {
        m.record(
            "eigen.double.eigen_residual",
            (a.jordan(v) - v.scale(lambda)).norm() / s,
        );
        m.record("eigen.double.orthogonality", (v.square() - *v).norm());
    }
    m.record("eigen.double.orthogonality", v1.jordan(&v2).norm());
    m.record(
        "eigen.double.consistency",
        (v1 + v2 - inv.complement).norm(),
    );

    let eps = 1e-3;
    let b = a + v1.scale(eps);
    match solve_char_poly(&b.char_poly(), tol) {
        Ok(r) if r.multiplicity == Multiplicity::Distinct => {}
        _ => m.fail("eigen.perturbation.not_distinct"),
    }
    match decompose(&b, tol) {
        Ok(d) => {
            for (l, p) in d.eigenvalues.iter().zip(&d.idempotents) {
                m.record(
                    "eigen.perturbation.ratio",
                    (a.jordan(p) - p.scale(*l)).norm() / eps,
                );
            }
        }
        Err(_) => m.fail("eigen.double.errors"),
    }
}

fn f4_checks(a: &Jordan64, tol: &Tolerances, m: &mut Measurements) {
    let (Ok(res), Ok(roots)) = (diagonalize(a, tol), solve_char_poly(&a.char_poly(), tol)) else {
        m.fail("f4.errors");
        return;
    };
    let s = 1.0 + a.norm();
    let before = res.invariants[0];
    for after in &res.invariants[1..] {
        m.record("f4.invariants", (after.trace - before.trace).abs() / s);
        m.record(
            "f4.invariants",
            (after.sigma - before.sigma).abs() / s.powi(2),
        );
        m.record("f4.invariants", (after.det - before.det).abs() / s.powi(3));
    }
    m.record("f4.residual", res.residual / s);
    let mut diag = res.diagonal;
    diag.sort_by(|x, y| y.total_cmp(x));
    for (x, y) in diag.iter().zip(roots.roots) {
        m.record("f4.diagonal_vs_roots", (x - y).abs() / s);
    }
}

fn oracle_checks(a: &Jordan64, rng: &mut ChaCha8Rng, tol: &Tolerances, m: &mut Measurements) {
    let s3 = (1.0 + a.norm()).powi(3);
    match modified_char_check(a) {
        Ok(report) => {
            if !report.pass {
                m.fail("oracle.fail");
            }
            m.record(
                "oracle.distinct_eigenvalues",
                report.distinct_eigenvalues() as f64,
            );
        }
        Err(_) => m.fail("oracle.errors"),
    }
    if let Ok(roots) = solve_char_poly(&a.char_poly(), tol) {
        for l in roots.roots {
            m.record("oracle.jordan_roots", a.shift(l).det().abs() / s3);
        }
    }
    let frame = QuaternionFrame::<f64>::random(rng);
    let q = frame.sample_jordan(rng);
    let sq = (1.0 + q.norm()).powi(3);
    match modified_char_check_in(&q, &frame.basis) {
        Ok(report) => {
            for c in &report.clusters {
                m.record("oracle.quaternionic_r", c.r.abs() / sq);
            }
        }
        Err(_) => m.fail("oracle.errors"),
    }
}

fn dirac_checks(rng: &mut ChaCha8Rng, tol: &Tolerances, m: &mut Measurements) {
    let u = random_complex_unit(rng);
    let theta: OctVector2<f64> = OctVector2([random_complex(rng, &u), random_complex(rng, &u)]);
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let p = theta.outer().scale(sign);
    let xi: Octonion64 = random_octonion(rng);
    match dirac_solve(&p, tol) {
        Ok(sol) => {
            let back = sol.theta.outer().scale(f64::from(sol.sign));
            m.record("dirac.round_trip", p.sub(&back).norm() / p.norm());
            let psi = sol.psi(&xi);
            let res = p.trace_reversal().apply(&psi).norm();
            m.record(
                "dirac.solution",
                res / ((1.0 + p.norm()) * (1.0 + xi.norm())),
            );
        }
        Err(_) => m.fail("dirac.errors"),
    }
    let (_, pp) = psi_pack(&theta, &xi);
    m.record(
        "dirac.packed_square",
        pp.freudenthal_square().norm() / (1.0 + pp.norm()).powi(2),
    );
}

fn psquare_checks(index: u64, rng: &mut ChaCha8Rng, tol: &Tolerances, m: &mut Measurements) {
    let nonzero = (index % 4) as usize;
    let mut spectrum = [0.0f64; 3];
    for x in spectrum.iter_mut().take(nonzero) {
        let mag = rng.gen_range(0.2..1.5);
        *x = if rng.gen_bool(0.5) { mag } else { -mag };
    }
    let a = with_spectrum(spectrum, rng);
    let class = classify_psquare(&a);
    match decompose(&a, tol) {
        Ok(d) => {
            let cutoff = 1e-8 * (1.0 + a.norm());
            let count = d.eigenvalues.iter().filter(|l| l.abs() > cutoff).count();
            if class != PSquareClass(count as u8) || class != PSquareClass(nonzero as u8) {
                m.fail("psquare.class_mismatch");
            }
        }
        Err(_) => m.fail("psquare.class_mismatch"),
    }
    match diagonalize(&a, tol) {
        Ok(res) => {
            let mut cur = a;
            for step in &res.steps {
                cur = f4_conjugate(step, &cur);
                if classify_psquare(&cur) != class {
                    m.fail("psquare.f4_class_change");
                    break;
                }
            }
        }
        Err(_) => m.fail("psquare.f4_class_change"),
    }
}
