use proptest::prelude::*;
use qarith::{q_binomial, q_int, rf_normalize, BigRational, LaurentPoly, RatFunc};

fn lp(t: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(t)
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..4).prop_map(|t| lp(&t))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent().prop_filter("nonzero", |d| !d.is_zero())).prop_map(|(n, d)| rf_normalize(n, d).unwrap())
}

fn points() -> Vec<BigRational> {
    vec![BigRational::new(3.into(), 2.into()), BigRational::new((-5).into(), 7.into())]
}

#[test]
fn normalize_examples() {
    assert_eq!(rf_normalize(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap(), lp(&[(1, 1), (0, 1)]).into());
    assert!(rf_normalize(LaurentPoly::zero(), lp(&[(3, 1)])).unwrap().is_zero());
    let r = rf_normalize(lp(&[(1, 1), (-1, 1)]), LaurentPoly::one()).unwrap();
    assert_eq!(r.numer(), &lp(&[(1, 1), (-1, 1)]));
}

#[test]
fn q_int_three() {
    assert_eq!(q_int(3), lp(&[(2, 1), (0, 1), (-2, 1)]));
}

#[test]
fn q_int_matches_defining_quotient() {
    let v = RatFunc::v_pow(1);
    let vi = RatFunc::v_pow(-1);
    for n in -6..=6i64 {
        let num = &v.pow(n as i32).unwrap() - &vi.pow(n as i32).unwrap();
        let quot = num.checked_div(&(&v - &vi)).unwrap();
        assert_eq!(quot, RatFunc::from(q_int(n)), "n = {n}");
    }
}

#[test]
fn json_roundtrip_and_format() {
    let p = lp(&[(-2, 1), (0, 3)]).scale(&BigRational::new(1.into(), 2.into()));
    let s = serde_json::to_string(&p).unwrap();
    assert_eq!(s, r#"[[-2,"1/2"],[0,"3/2"]]"#);
    assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    let r = rf_normalize(lp(&[(0, 1)]), lp(&[(0, 1), (2, 1)])).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    assert_eq!(s, r#"{"num":[[0,"1/1"]],"den":[[0,"1/1"],[2,"1/1"]]}"#);
    assert_eq!(serde_json::from_str::<RatFunc>(&s).unwrap(), r);
    assert!(serde_json::from_str::<LaurentPoly>(r#"[[1,"1"],[0,"1"]]"#).is_err());
}

proptest! {
    #[test]
    fn ring_axioms_laurent(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
    }

    #[test]
    fn field_axioms_ratfunc(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert!(qarith::props::agree(&(&(&a * &b) * &c), &(&a * &(&b * &c)), &points()));
        prop_assert!(qarith::props::agree(&(&(&a + &b) + &c), &(&a + &(&b + &c)), &points()));
        prop_assert!(qarith::props::agree(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)), &points()));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ratfunc(), b in ratfunc()) {
        for x in points() {
            if let (Ok(ea), Ok(eb), Ok(es), Ok(ep)) = (a.eval(&x), b.eval(&x), (&a + &b).eval(&x), (&a * &b).eval(&x)) {
                prop_assert_eq!(ea.clone() + eb.clone(), es);
                prop_assert_eq!(ea * eb, ep);
            }
        }
    }

    #[test]
    fn json_roundtrip(a in ratfunc()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<RatFunc>(&s).unwrap(), a);
    }

    #[test]
    fn binomial_symmetry(n in 0i64..14, k in 0i64..14) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
    }
}

#[test]
fn seeded_property_suites() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    qarith::props::field_axioms(&mut rng, 200).unwrap();
    qarith::props::canonical_forms(&mut rng, 200).unwrap();
    qarith::props::binomial_identities(16).unwrap();
    qarith::props::binomial_product_formula(10).unwrap();
}
