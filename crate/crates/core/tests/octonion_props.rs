use albert_core::octonion::{PRODUCT_INDEX, PRODUCT_SIGN};
use albert_core::sampling::random_octonion;
use albert_core::{associator, Octonion64 as O};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Independent oracle: integer Cayley–Dickson doubling of the quaternions,
// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
type Quat = [i64; 4];
type Oct = [i64; 8];

fn qmul(x: Quat, y: Quat) -> Quat {
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn qconj(x: Quat) -> Quat {
    [x[0], -x[1], -x[2], -x[3]]
}

fn qadd(x: Quat, y: Quat) -> Quat {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]
}

fn qsub(x: Quat, y: Quat) -> Quat {
    [x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]]
}

fn halves(x: Oct) -> (Quat, Quat) {
    ([x[0], x[1], x[2], x[3]], [x[4], x[5], x[6], x[7]])
}

fn doubling_mul(x: Oct, y: Oct) -> Oct {
    let (a, b) = halves(x);
    let (c, d) = halves(y);
    let lo = qsub(qmul(a, c), qmul(qconj(d), b));
    let hi = qadd(qmul(d, a), qmul(b, qconj(c)));
    [lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]]
}

fn unit(i: usize) -> Oct {
    let mut e = [0; 8];
    e[i] = 1;
    e
}

fn table_mul(x: Oct, y: Oct) -> Oct {
    let mut out = [0i64; 8];
    for i in 0..8 {
        for j in 0..8 {
            out[PRODUCT_INDEX[i][j]] += i64::from(PRODUCT_SIGN[i][j]) * x[i] * y[j];
        }
    }
    out
}

fn int_conj(x: Oct) -> Oct {
    let mut y = x.map(|c| -c);
    y[0] = x[0];
    y
}

fn int_norm2(x: Oct) -> i64 {
    x.iter().map(|c| c * c).sum()
}

fn int_sub(x: Oct, y: Oct) -> Oct {
    let mut out = x;
    for k in 0..8 {
        out[k] -= y[k];
    }
    out
}

#[test]
fn frozen_table_matches_doubling_formula() {
    for i in 0..8 {
        for j in 0..8 {
            let expect = doubling_mul(unit(i), unit(j));
            let mut got = [0i64; 8];
            got[PRODUCT_INDEX[i][j]] = i64::from(PRODUCT_SIGN[i][j]);
            assert_eq!(got, expect, "e{i} e{j}");
        }
    }
}

#[test]
fn table_is_antisymmetric_off_the_real_line() {
    for i in 1..8 {
        for j in 1..8 {
            if i == j {
                assert_eq!(PRODUCT_INDEX[i][j], 0);
                assert_eq!(PRODUCT_SIGN[i][j], -1);
            } else {
                assert_eq!(PRODUCT_INDEX[i][j], PRODUCT_INDEX[j][i]);
                assert_eq!(PRODUCT_SIGN[i][j], -PRODUCT_SIGN[j][i]);
            }
        }
    }
}

// Exhaustive integer checks over all pairs of small-integer combinations of
// two basis elements.
fn small_elements() -> Vec<Oct> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            for (s, t) in [(1, 0), (1, 1), (2, -1), (-1, 3)] {
                let mut x = [0; 8];
                x[i] += s;
                x[j] += t;
                out.push(x);
            }
        }
    }
    out
}

#[test]
fn integer_alternativity_and_norm_composition() {
    let elems = small_elements();
    for &x in elems.iter().step_by(3) {
        for &y in &elems {
            let xx = table_mul(x, x);
            assert_eq!(table_mul(xx, y), table_mul(x, table_mul(x, y)));
            assert_eq!(table_mul(y, xx), table_mul(table_mul(y, x), x));
            assert_eq!(int_norm2(table_mul(x, y)), int_norm2(x) * int_norm2(y));
            assert_eq!(
                int_conj(table_mul(x, y)),
                table_mul(int_conj(y), int_conj(x))
            );
        }
    }
}

#[test]
fn integer_moufang_on_basis() {
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let (x, y, z) = (unit(i), unit(j), unit(k));
                let lhs = table_mul(table_mul(table_mul(x, y), x), z);
                let rhs = table_mul(x, table_mul(y, table_mul(x, z)));
                assert_eq!(int_sub(lhs, rhs), [0; 8]);
            }
        }
    }
}

#[test]
fn float_identities_on_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_alt = 0.0f64;
    let mut worst_norm = 0.0f64;
    let mut worst_moufang = 0.0f64;
    for _ in 0..1000 {
        let x: O = random_octonion(&mut rng);
        let y: O = random_octonion(&mut rng);
        let z: O = random_octonion(&mut rng);
        let scale = x.norm2() * y.norm().max(1.0);
        worst_alt = worst_alt.max(((x * x) * y - x * (x * y)).norm() / scale);
        worst_alt = worst_alt.max(((y * x) * x - y * (x * x)).norm() / scale);
        let n = x.norm2() * y.norm2();
        worst_norm = worst_norm.max(((x * y).norm2() - n).abs() / n);
        let lhs = ((x * y) * x) * z;
        let rhs = x * (y * (x * z));
        let mag = x.norm2() * y.norm() * z.norm();
        worst_moufang = worst_moufang.max((lhs - rhs).norm() / mag);
    }
    assert!(worst_alt < 1e-14, "alternativity {worst_alt:e}");
    assert!(worst_norm <= 1e-12, "norm composition {worst_norm:e}");
    assert!(worst_moufang <= 1e-12, "Moufang {worst_moufang:e}");
}

fn oct() -> impl Strategy<Value = O> {
    prop::array::uniform8(-2.0f64..2.0).prop_map(O::new)
}

proptest! {
    #[test]
    fn conj_reverses_products(x in oct(), y in oct()) {
        let lhs = (x * y).conj();
        let rhs = y.conj() * x.conj();
        prop_assert!((lhs - rhs).norm() <= 1e-13 * (1.0 + x.norm() * y.norm()));
    }

    #[test]
    fn x_times_conj_is_real_norm(x in oct()) {
        let p = x * x.conj();
        prop_assert!(p.im().norm() <= 1e-14 * (1.0 + x.norm2()));
        prop_assert!((p.re() - x.norm2()).abs() <= 1e-14 * (1.0 + x.norm2()));
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn associator_alternates(x in oct(), y in oct(), z in oct()) {
        let a = associator(&x, &y, &z);
        let s = 1e-12 * (1.0 + x.norm() * y.norm() * z.norm());
        prop_assert!((a + associator(&y, &x, &z)).norm() <= s);
        prop_assert!((a + associator(&x, &z, &y)).norm() <= s);
        prop_assert!(associator(&x, &x, &y).norm() <= s);
        prop_assert!(associator(&O::one(), &x, &y).norm() <= s);
    }

    #[test]
    fn re_is_half_sum_with_conj(x in oct()) {
        prop_assert!(((x + x.conj()).re() / 2.0 - x.re()).abs() < 1e-15);
    }
}
