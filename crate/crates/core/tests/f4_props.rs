use albert_core::f4::{build_m3, product_conjugate, replay};
use albert_core::sampling::{random_jordan, random_quaternionic_vector, with_spectrum};
use albert_core::{
    build_m1_m2, diagonalize, f4_conjugate, phase_align, solve_char_poly, Jordan64 as J,
    OctVector3F64 as V, Octonion64 as O, Tolerances,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tol() -> Tolerances {
    Tolerances::default()
}

fn sorted_desc(mut x: [f64; 3]) -> [f64; 3] {
    x.sort_by(|a, b| b.total_cmp(a));
    x
}

#[test]
fn random_diagonalizations() {
    let mut r = rng(41);
    for _ in 0..1000 {
        let a: J = random_jordan(&mut r);
        let res = diagonalize(&a, &tol()).expect("diagonalization");
        let n = a.norm();
        let s1 = 1.0 + n;
        let before = res.invariants[0];
        for after in &res.invariants[1..] {
            assert!((after.trace - before.trace).abs() <= 1e-9 * s1);
            assert!((after.sigma - before.sigma).abs() <= 1e-9 * s1.powi(2));
            assert!((after.det - before.det).abs() <= 1e-9 * s1.powi(3));
        }
        assert!(res.residual <= 1e-8 * s1, "residual {:e}", res.residual);
        let roots = solve_char_poly(&a.char_poly(), &tol()).unwrap().roots;
        for (x, y) in sorted_desc(res.diagonal).iter().zip(roots) {
            assert!((x - y).abs() <= 1e-8 * s1);
        }
    }
}

#[test]
fn steps_are_hermitian_reflections_in_a_complex_subalgebra() {
    let mut r = rng(42);
    for _ in 0..200 {
        let a: J = random_jordan(&mut r);
        let res = diagonalize(&a, &tol()).unwrap();
        for m in &res.steps {
            // At most one nonzero off-diagonal entry, so every entry lies in
            // the complex subalgebra it generates.
            let nonzero = m.off_diagonal().iter().filter(|x| !x.is_zero()).count();
            assert!(nonzero <= 1);
            assert!(m.max_associator() <= 1e-15);
            assert!((m.square() - J::identity()).norm() <= 1e-12);
        }
    }
}

#[test]
fn replay_reproduces_the_result() {
    let mut r = rng(43);
    for _ in 0..100 {
        let a: J = random_jordan(&mut r);
        let res = diagonalize(&a, &tol()).unwrap();
        let path = replay(&a, &res.steps);
        let last = path.last().unwrap();
        assert_eq!(last.diagonal(), res.diagonal);
        for (m, cp) in path.iter().zip(&res.invariants) {
            assert_eq!(m.char_poly(), *cp);
        }
    }
}

#[test]
fn pivot_eigenvalue_lands_in_the_corner() {
    let mut r = rng(44);
    for _ in 0..200 {
        let a: J = random_jordan(&mut r);
        let res = diagonalize(&a, &tol()).unwrap();
        assert!((res.diagonal[2] - res.pivot_eigenvalue).abs() <= 1e-8 * (1.0 + a.norm()));
    }
}

#[test]
fn e3_equivariance_after_two_steps() {
    let mut r = rng(45);
    let e3 = J::unit(2);
    for _ in 0..200 {
        let a: J = random_jordan(&mut r);
        let res = diagonalize(&a, &tol()).unwrap();
        let lambda = res.pivot_eigenvalue;
        let shifted = a.shift(lambda);
        let b = f4_conjugate(&res.steps[1], &f4_conjugate(&res.steps[0], &shifted));
        assert!(b.jordan(&e3).norm() <= 1e-9 * (1.0 + a.norm()));
    }
}

#[test]
fn conjugation_preserves_jordan_products() {
    let mut r = rng(46);
    for _ in 0..200 {
        let a: J = random_jordan(&mut r);
        let b: J = random_jordan(&mut r);
        let m = diagonalize(&random_jordan(&mut r), &tol()).unwrap().steps[0];
        let lhs = f4_conjugate(&m, &a.jordan(&b));
        let rhs = f4_conjugate(&m, &a).jordan(&f4_conjugate(&m, &b));
        assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + a.norm()) * (1.0 + b.norm()));
    }
}

#[test]
fn nesting_matters() {
    let mut r = rng(47);
    let mut differ = 0;
    for _ in 0..100 {
        let a: J = random_jordan(&mut r);
        let res = diagonalize(&a, &tol()).unwrap();
        let (m1, m2) = (res.steps[0], res.steps[1]);
        let nested = f4_conjugate(&m2, &f4_conjugate(&m1, &a));
        let product = product_conjugate(&m1, &m2, &a);
        if (nested - product).norm() > 1e-6 {
            differ += 1;
        }
        // Only the nested form is guaranteed to keep the invariants.
        assert!((nested.det() - a.det()).abs() <= 1e-9 * (1.0 + a.norm()).powi(3));
    }
    assert!(differ > 90, "only {differ} of 100 differ");
}

#[test]
fn phase_alignment() {
    let mut r = rng(48);
    for _ in 0..1000 {
        let v: V = random_quaternionic_vector(&mut r);
        let w = phase_align(&v);
        assert!(w.0[2].im().norm() <= 1e-12);
        assert!(w.0[2].re() >= 0.0);
        assert!((w.norm2() - v.norm2()).abs() <= 1e-12);
        assert!((w.outer() - v.outer()).norm() <= 1e-12);
    }
    let v = V::new(O::zero(), O::zero(), O::basis(1));
    assert_eq!(phase_align(&v), V::from_reals([0.0, 0.0, 1.0]));
    let v = V::from_reals([1.0, 0.0, 2.0]);
    assert_eq!(phase_align(&v), v);
    let v = V::new(O::basis(3), O::one(), O::zero());
    assert_eq!(phase_align(&v), v);
}

#[test]
fn m1_m2_send_v_to_e3() {
    let mut r = rng(49);
    let e3 = V::from_reals([0.0, 0.0, 1.0]);
    for _ in 0..1000 {
        let v: V = random_quaternionic_vector(&mut r);
        let v = phase_align(&v.scale(v.norm().recip()));
        let (m1, m2) = build_m1_m2(&v).unwrap();
        let out = m2.apply(&m1.apply(&v));
        assert!(out.sub(&e3).norm() <= 1e-10);
    }
}

#[test]
fn m3_diagonalizes_the_block() {
    let mut r = rng(50);
    for _ in 0..1000 {
        let x: J = random_jordan(&mut r);
        let (s, t, z) = (x.p, x.m, x.a);
        let (m3, mu) = build_m3(s, t, &z);
        let block = J::new(s, t, 0.0, z, O::zero(), O::zero());
        let d = f4_conjugate(&m3, &block);
        assert!(d.off_diagonal_norm() <= 1e-12 * (1.0 + block.norm()));
        assert!((d.p - mu).abs() <= 1e-12 * (1.0 + block.norm()));
        assert!((d.m - (s + t - mu)).abs() <= 1e-12 * (1.0 + block.norm()));
    }
}

#[test]
fn degenerate_inputs() {
    let res = diagonalize(&J::identity().scale(2.0), &tol()).unwrap();
    assert!(res.steps.is_empty());
    assert_eq!(res.diagonal, [2.0; 3]);

    let ones = J::new(0.0, 0.0, 0.0, O::one(), O::one(), O::one());
    let res = diagonalize(&ones, &tol()).unwrap();
    for (x, y) in sorted_desc(res.diagonal).iter().zip([2.0, -1.0, -1.0]) {
        assert!((x - y).abs() <= 1e-8);
    }

    let mut r = rng(51);
    for spec in [[1.0, 1.0, -2.0], [0.5, -0.3, -0.3], [0.0, 0.0, 1.0]] {
        let a = with_spectrum(spec, &mut r);
        let res = diagonalize(&a, &tol()).unwrap();
        for (x, y) in sorted_desc(res.diagonal).iter().zip(sorted_desc(spec)) {
            assert!((x - y).abs() <= 1e-8 * (1.0 + a.norm()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn diagonal_multiset_matches_spectrum(spec in prop::array::uniform3(-2.0f64..2.0), seed in any::<u64>()) {
        let a = with_spectrum(spec, &mut rng(seed));
        let res = diagonalize(&a, &tol()).unwrap();
        for (x, y) in sorted_desc(res.diagonal).iter().zip(sorted_desc(spec)) {
            prop_assert!((x - y).abs() <= 1e-8 * (1.0 + a.norm()));
        }
    }
}
