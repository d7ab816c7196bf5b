use proptest::prelude::*;

use nonassoc::algebra::{jordan_transform, vadd, vscale};
use nonassoc::builtin::{builtin, octonions};
use nonassoc::fl::{fl_mul, h_variant_mul, FLElement, FlError, HTable};
use nonassoc::io::parse_algebra;
use nonassoc::near::haehl::{haehl_mul, Vec8};
use nonassoc::near::kalscheuer::kalscheuer_mul;
use nonassoc::near::pnr::{pnr_add, pnr_mul, pnr_neg};
use nonassoc::near::{ApproxQuaternion, HaehlParams, NearFieldParams, PNRElement, Rho};
use nonassoc::octonion::ExactOctonion;
use nonassoc::scalar::{fmt_rational, parse_rational, q, Gaussian, Rational};
use nonassoc::zorn::{zorn_decode, zorn_encode, zorn_mul};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn octonion() -> impl Strategy<Value = ExactOctonion> {
    proptest::collection::vec(rational(), 8).prop_map(|v| ExactOctonion::from_slice(&v))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), n)
}

fn word() -> impl Strategy<Value = PNRElement> {
    proptest::collection::vec((prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2), Just(3)], 0i64..4), 0..5)
        .prop_map(|t| PNRElement::from_ints(&t).unwrap())
}

fn quaternion() -> impl Strategy<Value = ApproxQuaternion> {
    proptest::array::uniform4(-2.0f64..2.0).prop_map(|c| ApproxQuaternion::new(c).unwrap())
}

fn fl_element() -> impl Strategy<Value = FLElement> {
    proptest::collection::vec((0u32..6, -5i64..=5), 0..4).prop_map(|t| {
        FLElement::from_terms(t.into_iter().map(|(k, c)| (k, Gaussian::new(q(c, 1), q(0, 1)))), 24).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn octonion_norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn octonions_are_alternative(x in octonion(), y in octonion()) {
        prop_assert!(x.associator(&x, &y).is_zero());
        prop_assert!(y.associator(&x, &x).is_zero());
        prop_assert!(x.associator(&y, &x).is_zero());
    }

    #[test]
    fn conjugation_reverses_products(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
    }

    #[test]
    fn zorn_product_matches_octonions(x in octonion(), y in octonion()) {
        let z = zorn_mul(&zorn_encode(&x), &zorn_encode(&y));
        prop_assert_eq!(zorn_decode(&z), Some(x.mul(&y)));
    }

    #[test]
    fn structure_constants_agree_with_octonions(x in vector(8), y in vector(8)) {
        let o = octonions();
        let direct = ExactOctonion::from_slice(&x).mul(&ExactOctonion::from_slice(&y));
        prop_assert_eq!(o.mul_vec(&x, &y), direct.c.to_vec());
    }

    #[test]
    fn product_is_bilinear(x in vector(10), y in vector(10), z in vector(10), s in rational()) {
        let h2 = builtin("H2").unwrap();
        let lhs = h2.mul_vec(&vadd(&x, &vscale(&s, &y)), &z);
        let rhs = vadd(&h2.mul_vec(&x, &z), &vscale(&s, &h2.mul_vec(&y, &z)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_transform_is_commutative(x in vector(4), y in vector(4)) {
        let m = jordan_transform(&builtin("M2").unwrap()).unwrap();
        prop_assert_eq!(m.mul_vec(&x, &y), m.mul_vec(&y, &x));
    }

    #[test]
    fn h3_satisfies_the_jordan_identity(x in vector(27), y in vector(27)) {
        let h3 = builtin("H3").unwrap();
        let x2 = h3.mul_vec(&x, &x);
        prop_assert!(h3.assoc_vec(&x, &y, &x2).iter().all(|c| *c == q(0, 1)));
    }

    #[test]
    fn rationals_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
    }

    #[test]
    fn loaded_tables_reproduce_products(c in proptest::collection::vec((0usize..3, 0usize..3, 0usize..3, rational()), 0..12), x in vector(3), y in vector(3)) {
        let mut seen = std::collections::BTreeMap::new();
        for (i, j, k, v) in c {
            seen.insert((i, j, k), v);
        }
        let rows: Vec<String> = seen.iter().map(|((i, j, k), v)| format!("[{i},{j},{k},\"{}\"]", fmt_rational(v))).collect();
        let a = parse_algebra(&format!("{{\"dim\": 3, \"table\": [{}]}}", rows.join(",")), "p").unwrap();
        let mut want = vec![q(0, 1); 3];
        for ((i, j, k), v) in &seen {
            want[*k] += &x[*i] * &y[*j] * v;
        }
        prop_assert_eq!(a.mul_vec(&x, &y), want);
    }

    #[test]
    fn pnr_addition_is_associative_and_cancels(f in word(), g in word(), h in word()) {
        prop_assert_eq!(pnr_add(&pnr_add(&f, &g), &h), pnr_add(&f, &pnr_add(&g, &h)));
        prop_assert!(pnr_add(&f, &pnr_neg(&f)).is_zero());
        prop_assert!(pnr_add(&pnr_neg(&f), &f).is_zero());
    }

    #[test]
    fn pnr_reduction_is_confluent(t in proptest::collection::vec((prop_oneof![Just(-1i64), Just(1), Just(2)], 0i64..3), 0..8), split in 0usize..8) {
        let s = split.min(t.len());
        let whole = PNRElement::from_ints(&t).unwrap();
        let pieces = pnr_add(&PNRElement::from_ints(&t[..s]).unwrap(), &PNRElement::from_ints(&t[s..]).unwrap());
        prop_assert_eq!(whole, pieces);
    }

    #[test]
    fn kalscheuer_left_distributive_and_norm_multiplicative(a in quaternion(), b in quaternion(), c in quaternion()) {
        let p = NearFieldParams::with_w(1.0);
        let m = |x: &ApproxQuaternion, y: &ApproxQuaternion| kalscheuer_mul(x, y, &p);
        let lhs = m(&a, &(b.clone() + c.clone()));
        let rhs = m(&a, &b) + m(&a, &c);
        let scale = 1.0 + a.norm().sqrt() * (b.norm().sqrt() + c.norm().sqrt());
        prop_assert!((lhs - rhs).coords().iter().all(|d| d.abs() < 1e-12 * scale));
        prop_assert!((m(&a, &b).norm() - a.norm() * b.norm()).abs() < 1e-12 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn haehl_left_distributive(a in proptest::array::uniform8(-2.0f64..2.0), x in proptest::array::uniform8(-2.0f64..2.0), y in proptest::array::uniform8(-2.0f64..2.0)) {
        let p = HaehlParams::new(2.0, Rho::Cube).unwrap();
        let (a, x, y) = (Vec8::from(a), Vec8::from(x), Vec8::from(y));
        let d = haehl_mul(&a, &(x + y), &p) - haehl_mul(&a, &x, &p) - haehl_mul(&a, &y, &p);
        prop_assert!(d.amax() < 1e-11);
    }

    #[test]
    fn fl_is_commutative_and_unital(f in fl_element(), g in fl_element()) {
        prop_assert_eq!(fl_mul(&f, &g).unwrap(), fl_mul(&g, &f).unwrap());
        prop_assert_eq!(fl_mul(&FLElement::unit(24), &f).unwrap(), f.clone());
        prop_assert_eq!(h_variant_mul(&f, &g, &HTable::ones(6)).unwrap(), fl_mul(&f, &g).unwrap());
    }

    #[test]
    fn fl_truncation_is_reported(m in 13u32..=24, n in 13u32..=24) {
        let r = fl_mul(&FLElement::monomial(m, 24).unwrap(), &FLElement::monomial(n, 24).unwrap());
        prop_assert_eq!(r, Err(FlError::TruncationExceeded { degree: m + n, bound: 24 }));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pnr_right_distributive_and_associative(f in word(), g in word(), h in word()) {
        let m = |a: &PNRElement, b: &PNRElement| pnr_mul(a, b).unwrap();
        prop_assert_eq!(m(&pnr_add(&f, &g), &h), pnr_add(&m(&f, &h), &m(&g, &h)));
        prop_assert_eq!(m(&m(&f, &g), &h), m(&f, &m(&g, &h)));
        prop_assert!(m(&f, &PNRElement::zero()).is_zero());
    }
}
