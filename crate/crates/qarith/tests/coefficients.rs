use qarith::{
    cg_coeff, cg_coeff_q, kash_coeff, kash_coeff_underline, q, q_binomial, q_int, CoeffKind, LaurentPoly, RatFunc,
    StringTriple,
};

#[test]
fn underlined_up_example() {
    let v = LaurentPoly::v();
    let c = kash_coeff_underline(CoeffKind::Up, StringTriple::new(2, 2, 1), &v).unwrap();
    assert_eq!(c, RatFunc::from(q_int(2)).inv().unwrap());
    for l in 0..6 {
        assert!(kash_coeff_underline(CoeffKind::Up, StringTriple::new(l, 0, -l), &v).unwrap().is_one());
    }
}

#[test]
fn coefficient_laws_small() {
    qarith::props::kash_symmetry(8).unwrap();
    qarith::props::kash_composition(6).unwrap();
    qarith::props::kash_normalizations(8).unwrap();
}

#[test]
fn coefficients_at_q() {
    // evaluating at z = q squares every exponent
    let c = kash_coeff(CoeffKind::Low, StringTriple::new(4, 3, 2), &q()).unwrap();
    let expect = &q_int(3).subs_pow(2) * &q_int(2).subs_pow(2);
    assert_eq!(c, expect.into());
}

#[test]
fn cg_branches() {
    let v = LaurentPoly::v();
    // d - c >= r branch
    assert_eq!(cg_coeff(2, 1, 3, 6, &v).unwrap(), &q_binomial(3, 1) * &q_binomial(5, 1));
    // d - c < r branch
    assert_eq!(cg_coeff(3, 1, 2, 4, &v).unwrap(), &q_binomial(2, 1) * &q_binomial(3, 3));
    assert_eq!(cg_coeff(3, 1, 2, 4, &q()).unwrap(), cg_coeff_q(3, 1, 2, 4));
}
