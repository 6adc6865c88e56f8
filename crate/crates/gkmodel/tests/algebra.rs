use crystal::Pattern;
use gkmodel::props::*;
use gkmodel::*;
use proptest::prelude::{prop_assert, prop_assert_eq, proptest, Strategy as _};
use qarith::{LaurentPoly, RatFunc};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn g(x: Gen) -> GKElement {
    GKElement::generator(x)
}

fn mono(e: [u32; 6], k: i32) -> GKElement {
    GKElement::monomial(Monomial(e), RatFunc::v_pow(k))
}

fn nf(word: &[Gen]) -> GKElement {
    normal_form(word, Strategy::Leftmost, DEFAULT_FUEL).unwrap()
}

fn pat(a: [i64; 6]) -> Pattern {
    Pattern::from_array(a).unwrap()
}

#[test]
fn straightening_examples() {
    use Gen::*;
    // z2 z1 = q v2 z21 + q^{-1} z12 v1 = z21 v2 + q^{-1} z12 v1
    let expected = mono([0, 0, 0, 1, 0, 1], 0).add(&mono([0, 0, 1, 0, 1, 0], -2));
    assert_eq!(nf(&[Z2, Z1]), expected);
    let via_relation_form = nf(&[V2, Z21]).scale(&RatFunc::v_pow(2)).add(&nf(&[Z12, V1]).scale(&RatFunc::v_pow(-2)));
    assert_eq!(via_relation_form, expected);
    assert_eq!(nf(&[V1, Z1]), mono([1, 0, 0, 0, 1, 0], -2));
    assert_eq!(nf(&[Z12, Z21]), mono([0, 0, 1, 1, 0, 0], 0));
    assert_eq!(nf(&[Z21, Z12]), mono([0, 0, 1, 1, 0, 0], 0));
}

#[test]
fn multiplication_basics() {
    use Gen::*;
    let a = nf(&[Z1, V2, Z12]);
    assert_eq!(GKElement::one().mul(&a).unwrap(), a);
    assert_eq!(g(Z1).mul(&g(Z2)).unwrap(), nf(&[Z1, Z2]));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    associativity(&mut rng, 1000, 3).unwrap();
}

#[test]
fn generator_actions() {
    use Gen::*;
    assert_eq!(act_gen(1, Op::E, &g(Z1)).unwrap(), g(V1));
    assert_eq!(act_gen(1, Op::F, &g(V1)).unwrap(), g(Z1));
    assert_eq!(act_gen(2, Op::E, &g(Z21)).unwrap(), g(Z1));
    assert_eq!(act_gen(1, Op::F, &g(Z2)).unwrap(), g(Z12));
    assert!(act_gen(1, Op::E, &g(V1)).unwrap().is_zero());
    assert!(act_gen(3, Op::E, &g(V1)).is_err());
}

#[test]
fn leibniz_on_a_square() {
    use Gen::*;
    // E1(z1 z1) = v1 K(z1) + K^{-1}(z1) v1 = (v^{-3} + v) z1 v1
    let lhs = act_gen(1, Op::E, &nf(&[Z1, Z1])).unwrap();
    let c = LaurentPoly::from_int_terms(&[(-3, 1), (1, 1)]);
    assert_eq!(lhs, GKElement::monomial(Monomial([1, 0, 0, 0, 1, 0]), c.into()));
}

#[test]
fn basis_elements() {
    assert_eq!(b_monomial(&pat([0, 0, 0, 0, 1, 0])), g(Gen::V1));
    assert_eq!(b_monomial(&pat([1, 0, 0, 0, 0, 0])), g(Gen::Z1));
    assert_eq!(b_monomial(&pat([0, 0, 1, 0, 0, 0])), g(Gen::Z12));
    assert!(b_monomial(&pat([0, 0, -1, 1, 0, 0])).is_zero());
}

#[test]
fn sigma_hat_examples() {
    use Gen::*;
    assert_eq!(g(V1).sigma_hat().unwrap(), g(Z21));
    // sigma_hat(z12 v2) = sigma_hat(v2) sigma_hat(z12) = z12 v2, already normal
    assert_eq!(nf(&[Z12, V2]).sigma_hat().unwrap(), mono([0, 0, 1, 0, 0, 1], 0));
    sigma_hat_involution_and_grading(4).unwrap();
}

#[test]
fn rewriting_is_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    confluence(&mut rng, 1000, 6).unwrap();
}

#[test]
fn sigma_hat_is_anti_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    anti_homomorphism(&mut rng, 1000, 3).unwrap();
}

#[test]
fn sigma_hat_permutes_the_basis() {
    basis_compatibility(4).unwrap();
}

#[test]
fn products_of_fundamental_modules() {
    product_of_modules().unwrap();
}

#[test]
fn action_satisfies_quantum_relations() {
    quantum_relations(4).unwrap();
}

#[test]
fn action_matches_module_formulas() {
    embed_module(1, 0, 2).unwrap();
    embed_module(0, 0, 2).unwrap();
    embed_module(1, 1, 2).unwrap();
    for (l1, l2) in [(2, 1), (1, 2), (3, 0), (2, 2)] {
        embed_module(l1, l2, 3).unwrap();
    }
}

#[test]
fn parser() {
    use Gen::*;
    assert_eq!(parse_expr("z2*z1*v1").unwrap(), nf(&[Z2, Z1, V1]));
    assert_eq!(parse_expr("q^{-1/2}*z1^2").unwrap(), nf(&[Z1, Z1]).scale(&RatFunc::v_pow(-1)));
    assert_eq!(
        parse_expr("q*v1 - v1").unwrap(),
        g(V1).scale(&RatFunc::from(LaurentPoly::from_int_terms(&[(2, 1), (0, -1)])))
    );
    assert_eq!(parse_expr("-3*z12").unwrap(), g(Z12).scale(&RatFunc::from_int(-3)));
    assert_eq!(parse_expr("q^{-1}").unwrap(), GKElement::one().scale(&RatFunc::v_pow(-2)));
    for bad in ["", "z3", "z1**z2", "q^{x}", "z1^y"] {
        assert!(parse_expr(bad).is_err(), "{bad}");
    }
}

#[test]
fn json_format() {
    let v = parse_expr("z2*z1").unwrap().to_json();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[1]["monomial"], serde_json::json!([0, 0, 1, 0, 1, 0]));
    assert_eq!(arr[1]["coeff"]["num"], serde_json::json!([[-2, "1/1"]]));
    assert_eq!(arr[0]["monomial"], serde_json::json!([0, 0, 0, 1, 0, 1]));
}

fn arb_word() -> impl proptest::strategy::Strategy<Value = Vec<Gen>> {
    proptest::collection::vec(0usize..6, 0..=5).prop_map(|v| v.into_iter().map(|k| Gen::ALL[k]).collect())
}

proptest! {
    #[test]
    fn strategies_agree(w in arb_word()) {
        prop_assert_eq!(
            normal_form(&w, Strategy::Leftmost, DEFAULT_FUEL).unwrap(),
            normal_form(&w, Strategy::Rightmost, DEFAULT_FUEL).unwrap()
        );
    }

    #[test]
    fn product_weight_is_additive(a in arb_word(), b in arb_word()) {
        let x = nf(&a);
        let y = nf(&b);
        let p = x.mul(&y).unwrap();
        let wa = Monomial::from_word(&a).weight();
        let wb = Monomial::from_word(&b).weight();
        prop_assert!(p.is_zero() || p.homogeneous_weight() == Some([wa[0] + wb[0], wa[1] + wb[1]]));
    }
}
