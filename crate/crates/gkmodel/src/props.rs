//! Property checks for the GK model. Each returns `Err(witness)` on the first failure.

use crystal::{enumerate_component, Pattern};
use qarith::RatFunc;
use rand::Rng;
use repmodule::{ModuleVLambda, ModuleVector};
use serde_json::{json, Value};

use crate::{
    act_divided, act_gen, b_monomial, k_alpha, normal_form, q_number, to_b_coords, GKElement, Gen, GkError, Monomial,
    Op, Strategy, DEFAULT_FUEL,
};

fn gk_err(e: GkError) -> Value {
    json!({"error": e.to_string()})
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Vec<Gen> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| Gen::ALL[rng.gen_range(0..6)]).collect()
}

/// A random normal-ordered monomial (`z1` and `z2` never together) of degree `<= max_degree`.
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, max_degree: usize) -> Monomial {
    let mut m = Monomial::from_word(&random_word(rng, max_degree));
    if m.0[0] > 0 && m.0[1] > 0 {
        let k = rng.gen_range(0..2);
        m.0[k] = 0;
    }
    m
}

/// Every normal-ordered monomial of degree `<= max_degree`.
pub fn monomials_up_to(max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![Monomial::one()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for m in &frontier {
            for g in Gen::ALL {
                let mut e = m.0;
                e[g.index()] += 1;
                let mm = Monomial(e);
                if (e[0] == 0 || e[1] == 0) && !next.contains(&mm) {
                    next.push(mm);
                }
            }
        }
        out.extend(next.iter().copied());
        frontier = next;
    }
    out
}

fn elt(m: Monomial) -> GKElement {
    GKElement::monomial(m, RatFunc::one())
}

/// Leftmost and rightmost rewriting give the same normal form.
pub fn confluence<R: Rng + ?Sized>(rng: &mut R, samples: usize, max_len: usize) -> Result<(), Value> {
    for _ in 0..samples {
        let w = random_word(rng, max_len);
        let a = normal_form(&w, Strategy::Leftmost, DEFAULT_FUEL).map_err(gk_err)?;
        let b = normal_form(&w, Strategy::Rightmost, DEFAULT_FUEL).map_err(gk_err)?;
        if a != b {
            let names: Vec<&str> = w.iter().map(|g| g.name()).collect();
            return Err(json!({"word": names, "leftmost": a, "rightmost": b}));
        }
        if a.homogeneous_weight().is_some_and(|x| x != Monomial::from_word(&w).weight()) {
            return Err(json!({"word": format!("{w:?}"), "law": "rewriting preserves weight"}));
        }
    }
    Ok(())
}

/// `(ab)c = a(bc)` on random monomials.
pub fn associativity<R: Rng + ?Sized>(rng: &mut R, samples: usize, max_degree: usize) -> Result<(), Value> {
    for _ in 0..samples {
        let [a, b, c] = [0; 3].map(|_| elt(random_monomial(rng, max_degree)));
        let lhs = a.mul(&b).and_then(|ab| ab.mul(&c)).map_err(gk_err)?;
        let rhs = b.mul(&c).and_then(|bc| a.mul(&bc)).map_err(gk_err)?;
        if lhs != rhs {
            return Err(json!({"a": a, "b": b, "c": c}));
        }
    }
    Ok(())
}

/// `sigma_hat(ab) = sigma_hat(b) sigma_hat(a)` on random monomial pairs.
pub fn anti_homomorphism<R: Rng + ?Sized>(rng: &mut R, samples: usize, max_degree: usize) -> Result<(), Value> {
    for _ in 0..samples {
        let a = elt(random_monomial(rng, max_degree));
        let b = elt(random_monomial(rng, max_degree));
        let lhs = a.mul(&b).and_then(|ab| ab.sigma_hat()).map_err(gk_err)?;
        let rhs = b.sigma_hat().and_then(|sb| sb.mul(&a.sigma_hat()?)).map_err(gk_err)?;
        if lhs != rhs {
            return Err(json!({"a": a, "b": b, "lhs": lhs, "rhs": rhs}));
        }
    }
    Ok(())
}

/// `sigma_hat` is an involution and maps weight `(a, b)` to `w_0 (a, b) = (-b, -a)`,
/// on all monomials of degree `<= max_degree`.
pub fn sigma_hat_involution_and_grading(max_degree: u32) -> Result<(), Value> {
    for m in monomials_up_to(max_degree) {
        let x = elt(m);
        let s = x.sigma_hat().map_err(gk_err)?;
        if s.sigma_hat().map_err(gk_err)? != x {
            return Err(json!({"monomial": m.to_string(), "law": "involution"}));
        }
        let [a, b] = m.weight();
        if s.homogeneous_weight() != Some([-b, -a]) {
            return Err(json!({"monomial": m.to_string(), "law": "grading"}));
        }
    }
    Ok(())
}

/// `sigma_hat(b_m) = b_{sigma(m)}` for basis patterns with entry sum `<= max_sum`.
pub fn basis_compatibility(max_sum: i64) -> Result<(), Value> {
    for d in 0..=max_sum {
        for l1 in 0..=d {
            for m in enumerate_component(l1, d - l1) {
                let lhs = b_monomial(&m).sigma_hat().map_err(gk_err)?;
                let rhs = b_monomial(&m.sigma_outer());
                if lhs != rhs {
                    return Err(json!({"pattern": m.to_string(), "sigma_hat(b_m)": lhs, "b_sigma(m)": rhs}));
                }
            }
        }
    }
    Ok(())
}

/// `b_m b_m'` for `m` in `M_{1,0}` and `m'` in `M_{0,1}` is supported on `M_{1,1}`.
pub fn product_of_modules() -> Result<(), Value> {
    let target: Vec<Pattern> = enumerate_component(1, 1);
    for m in enumerate_component(1, 0) {
        for m2 in enumerate_component(0, 1) {
            let p = b_monomial(&m).mul(&b_monomial(&m2)).map_err(gk_err)?;
            if p.is_zero() {
                return Err(json!({"m": m.to_string(), "m'": m2.to_string(), "law": "nonzero product"}));
            }
            let outside = p.terms().map(|(x, _)| *x).find(|x| !target.contains(&x.to_pattern()));
            if let Some(x) = outside {
                return Err(json!({"m": m.to_string(), "m'": m2.to_string(), "outside": x.to_string()}));
            }
        }
    }
    Ok(())
}

/// `[E_i, F_j] = delta_ij (K_i - K_i^{-1})/(q - q^{-1})` and the quantum Serre
/// relations for the action on monomials of degree `<= max_degree`.
pub fn quantum_relations(max_degree: u32) -> Result<(), Value> {
    for m in monomials_up_to(max_degree) {
        let x = elt(m);
        let fail = |law: &str| Err(json!({"monomial": m.to_string(), "law": law}));
        for i in [1u8, 2] {
            for j in [1u8, 2] {
                let ef = act_gen(j, Op::F, &x).and_then(|y| act_gen(i, Op::E, &y)).map_err(gk_err)?;
                let fe = act_gen(i, Op::E, &x).and_then(|y| act_gen(j, Op::F, &y)).map_err(gk_err)?;
                let rhs = if i == j { x.scale(&q_number(m.weight()[i as usize - 1])) } else { GKElement::zero() };
                if ef.sub(&fe) != rhs {
                    return fail("[E_i, F_j]");
                }
            }
            let j = 3 - i;
            for op in [Op::E, Op::F] {
                let mut total = GKElement::zero();
                for r in 0..=2u32 {
                    let t = act_divided(i, op, 2 - r, &x)
                        .and_then(|y| act_gen(j, op, &y))
                        .and_then(|y| act_divided(i, op, r, &y))
                        .map_err(gk_err)?;
                    total.add_scaled(&t, &RatFunc::from_int(if r == 1 { -1 } else { 1 }));
                }
                if !total.is_zero() {
                    return fail("quantum Serre");
                }
            }
            // K_i X_i K_i^{-1} = q^{±2} X_i on homogeneous elements
            let e = act_gen(i, Op::E, &x).map_err(gk_err)?;
            if k_alpha(i, &e) != e.scale(&RatFunc::v_pow(2 * (m.weight()[i as usize - 1] as i32 + 2))) {
                return fail("E_i raises weight by alpha_i");
            }
        }
    }
    Ok(())
}

fn module_gen(op: Op) -> repmodule::Gen {
    match op {
        Op::E => repmodule::Gen::E,
        Op::F => repmodule::Gen::F,
    }
}

/// The divided powers of the GK action on `b_m` reproduce the module action
/// on `V_{l1,l2}` exactly, for `r <= max_r`.
pub fn embed_module(l1: i64, l2: i64, max_r: u32) -> Result<(), Value> {
    let module = ModuleVLambda::new(l1, l2).map_err(|e| json!(e.to_string()))?;
    for m in module.basis() {
        for k in [1u8, 2] {
            for op in [Op::E, Op::F] {
                for r in 0..=max_r {
                    let gk = act_divided(k, op, r, &b_monomial(m)).map_err(gk_err)?;
                    let lhs = ModuleVector::from_terms(to_b_coords(&gk));
                    let rhs = module
                        .act_divided(module_gen(op), k, r as i64, &ModuleVector::basis(*m))
                        .map_err(|e| json!(e.to_string()))?;
                    if lhs != rhs {
                        return Err(json!({
                            "lambda": [l1, l2], "pattern": m.to_string(), "k": k,
                            "op": if op == Op::E { "E" } else { "F" }, "r": r,
                            "gk": format!("{lhs:?}"), "module": format!("{rhs:?}"),
                        }));
                    }
                }
            }
        }
    }
    Ok(())
}
