//! Property checks over Q(v), usable from tests and from the CLI suite runner.
//! Each returns `Err(witness)` with the first counterexample found.

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde_json::{json, Value};

use crate::qnum::{kash_coeff, kash_coeff_underline, q_binomial, q_int, CoeffKind, StringTriple};
use crate::{LaurentPoly, RatFunc};

/// Random Laurent polynomial with exponents in `[-span, span]` and small integer coefficients.
pub fn random_laurent<R: Rng + ?Sized>(rng: &mut R, span: i32) -> LaurentPoly {
    let n = rng.gen_range(0..=3);
    LaurentPoly::from_terms((0..n).map(|_| {
        let k = rng.gen_range(-span..=span);
        let c = rng.gen_range(-4i64..=4);
        (k, BigRational::from_integer(c.into()))
    }))
}

/// Random rational function with a nonzero denominator.
pub fn random_ratfunc<R: Rng + ?Sized>(rng: &mut R) -> RatFunc {
    let num = random_laurent(rng, 3);
    let mut den = random_laurent(rng, 2);
    while den.is_zero() {
        den = random_laurent(rng, 2);
    }
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// Random nonzero rational specialization point.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    loop {
        let p = rng.gen_range(-40i64..=40);
        let q = rng.gen_range(1i64..=17);
        if p != 0 {
            return BigRational::new(p.into(), q.into());
        }
    }
}

/// The two specialization points used throughout as an independent oracle.
pub fn fixed_points() -> [BigRational; 2] {
    [BigRational::new(3.into(), 2.into()), BigRational::new((-5).into(), 7.into())]
}

/// Check `lhs == rhs` symbolically and at the given points (points at a pole are skipped).
pub fn agree(lhs: &RatFunc, rhs: &RatFunc, points: &[BigRational]) -> bool {
    if lhs != rhs {
        return false;
    }
    points.iter().all(|x| match (lhs.eval(x), rhs.eval(x)) {
        (Ok(a), Ok(b)) => a == b,
        _ => true,
    })
}

/// Field axioms on random elements, symbolically and by specialization.
pub fn field_axioms<R: Rng + ?Sized>(rng: &mut R, samples: usize) -> Result<(), Value> {
    let mut points: Vec<BigRational> = (0..20).map(|_| random_point(rng)).collect();
    points.extend(fixed_points());
    for _ in 0..samples {
        let a = random_ratfunc(rng);
        let b = random_ratfunc(rng);
        let c = random_ratfunc(rng);
        let fail = |law: &str| json!({"law": law, "a": a, "b": b, "c": c});
        if !agree(&(&(&a + &b) + &c), &(&a + &(&b + &c)), &points) {
            return Err(fail("additive associativity"));
        }
        if !agree(&(&(&a * &b) * &c), &(&a * &(&b * &c)), &points) {
            return Err(fail("multiplicative associativity"));
        }
        if !agree(&(&a * &b), &(&b * &a), &points) || !agree(&(&a + &b), &(&b + &a), &points) {
            return Err(fail("commutativity"));
        }
        if !agree(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)), &points) {
            return Err(fail("distributivity"));
        }
        if !agree(&(&a + &RatFunc::zero()), &a, &points) || !agree(&(&a * &RatFunc::one()), &a, &points) {
            return Err(fail("identities"));
        }
        if !(&a - &a).is_zero() {
            return Err(fail("additive inverse"));
        }
        if !a.is_zero() && !(&a * &a.inv().expect("nonzero")).is_one() {
            return Err(fail("multiplicative inverse"));
        }
        // specialization is a ring homomorphism
        for x in &points {
            if let (Ok(ea), Ok(eb), Ok(eab)) = (a.eval(x), b.eval(x), (&a * &b).eval(x)) {
                if ea.clone() * eb.clone() != eab {
                    return Err(fail("specialization of product"));
                }
                if let Ok(es) = (&a + &b).eval(x) {
                    if ea + eb != es {
                        return Err(fail("specialization of sum"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `binom(n,k) = binom(n,n-k)` and the q-Pascal identity, for `n <= max_n`.
pub fn binomial_identities(max_n: i64) -> Result<(), Value> {
    for n in 0..=max_n {
        for k in 0..=n {
            if q_binomial(n, k) != q_binomial(n, n - k) {
                return Err(json!({"law": "binomial symmetry", "n": n, "k": k}));
            }
            if (1..n).contains(&k) {
                let rhs = &q_binomial(n - 1, k).shift(-(k as i32)) + &q_binomial(n - 1, k - 1).shift((n - k) as i32);
                if q_binomial(n, k) != rhs {
                    return Err(json!({"law": "q-Pascal", "n": n, "k": k}));
                }
            }
        }
    }
    Ok(())
}

/// The Laurent-polynomial binomial agrees with the product formula
/// `prod_{s=1}^k (n-s+1)_v / (s)_v` evaluated in Q(v).
pub fn binomial_product_formula(max_n: i64) -> Result<(), Value> {
    for n in 0..=max_n {
        for k in 0..=n {
            let mut prod = RatFunc::one();
            for s in 1..=k {
                prod = &prod * &RatFunc::from(q_int(n - s + 1));
                prod = prod.checked_div(&RatFunc::from(q_int(s))).expect("nonzero");
            }
            let b = q_binomial(n, k);
            if prod.to_laurent().as_ref() != Some(&b) {
                return Err(json!({"law": "binomial product formula", "n": n, "k": k, "got": b}));
            }
        }
    }
    Ok(())
}

fn both_kinds() -> [CoeffKind; 2] {
    [CoeffKind::Low, CoeffKind::Up]
}

fn kind_name(kind: CoeffKind) -> &'static str {
    match kind {
        CoeffKind::Low => "low",
        CoeffKind::Up => "up",
    }
}

/// `c_{l,k,s} (underlined) = c_{l,l-k,-s} (underlined)` on the domain, both kinds, `l <= max_l`.
pub fn kash_symmetry(max_l: i64) -> Result<(), Value> {
    let v = LaurentPoly::v();
    for kind in both_kinds() {
        for l in 0..=max_l {
            for k in 0..=l {
                for s in (k - l)..=k {
                    let a = kash_coeff_underline(kind, StringTriple::new(l, k, s), &v).expect("monomial point");
                    let b = kash_coeff_underline(kind, StringTriple::new(l, l - k, -s), &v).expect("monomial point");
                    if !agree(&a, &b, &fixed_points()) {
                        return Err(json!({"kind": kind_name(kind), "l": l, "k": k, "s": s, "lhs": a, "rhs": b}));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `c_{l,k,s+t} = c_{l,k,s} c_{l,k-s,t}` whenever `st >= 0`, both kinds, `l <= max_l`.
pub fn kash_composition(max_l: i64) -> Result<(), Value> {
    let v = LaurentPoly::v();
    for kind in both_kinds() {
        for l in 0..=max_l {
            for k in 0..=l {
                for s in -l..=l {
                    for t in -l..=l {
                        if s * t < 0 {
                            continue;
                        }
                        let c = |k, s| kash_coeff(kind, StringTriple::new(l, k, s), &v).expect("monomial point");
                        let lhs = c(k, s + t);
                        let rhs = &c(k, s) * &c(k - s, t);
                        if !agree(&lhs, &rhs, &fixed_points()) {
                            return Err(json!({"kind": kind_name(kind), "l": l, "k": k, "s": s, "t": t}));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The underlined lower coefficient is identically 1 and `c_{l,0,-l}` (underlined) is 1 for both kinds.
pub fn kash_normalizations(max_l: i64) -> Result<(), Value> {
    let v = LaurentPoly::v();
    for l in 0..=max_l {
        for k in 0..=l {
            for s in (k - l)..=k {
                let c = kash_coeff_underline(CoeffKind::Low, StringTriple::new(l, k, s), &v).expect("monomial point");
                if !c.is_one() {
                    return Err(json!({"law": "underlined low is 1", "l": l, "k": k, "s": s}));
                }
            }
        }
        for kind in both_kinds() {
            let c = kash_coeff_underline(kind, StringTriple::new(l, 0, -l), &v).expect("monomial point");
            if !c.is_one() {
                return Err(json!({"law": "c_{l,0,-l} = 1", "kind": kind_name(kind), "l": l}));
            }
        }
    }
    Ok(())
}

/// Canonical forms: equal values have equal representations, checked by
/// building the same function two different ways.
pub fn canonical_forms<R: Rng + ?Sized>(rng: &mut R, samples: usize) -> Result<(), Value> {
    for _ in 0..samples {
        let a = random_ratfunc(rng);
        let m = random_laurent(rng, 2);
        if m.is_zero() {
            continue;
        }
        let rebuilt = RatFunc::new(a.numer() * &m, a.denom() * &m).expect("nonzero");
        if rebuilt != a {
            return Err(json!({"a": a, "multiplier": m}));
        }
        let d = a.denom();
        if !d.is_zero()
            && (d.low_exp() != Some(0) || !d.leading_coeff().is_some_and(|c| *c == BigRational::from_integer(1.into())))
        {
            return Err(json!({"non-canonical denominator": a}));
        }
        if d.trailing_coeff().is_some_and(Zero::is_zero) {
            return Err(json!({"zero constant term": a}));
        }
    }
    Ok(())
}
