//! Property checks on `V_{l1,l2}`. Each returns `Err(witness)` on the first failure.

use coxeter::{GroupElement, SubsetJ};
use crystal::Pattern;
use qarith::{q_binomial_in_q, q_int, RatFunc};
use serde_json::{json, Value};

use cartan::Weight;

pub use crate::gt::{c_block_structure, c_matches_gt_vectors, conjecture_order_three, involution_check};
pub use crate::strings::vector_rank;
use crate::{Gen, ModuleError, ModuleVLambda, ModuleVector, Sign};

fn lam(m: &ModuleVLambda) -> Value {
    json!([m.l1(), m.l2()])
}

fn err(m: &ModuleVLambda) -> impl Fn(ModuleError) -> Value + '_ {
    move |e| json!({"lambda": lam(m), "error": e.to_string()})
}

fn gen_name(g: Gen) -> &'static str {
    match g {
        Gen::E => "E",
        Gen::F => "F",
    }
}

/// `[E_i, F_j] = delta_ij (K_i - K_i^{-1}) / (q - q^{-1})`, both quantum Serre
/// relations and `X^{(r)} X^{(s)} = binom(r+s, r)_q X^{(r+s)}` for
/// `r + s <= l1 + l2 + 2`, on every basis vector.
pub fn quantum_relations(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let act = |g, i, r, v: &ModuleVector| m.act_divided(g, i, r, v).map_err(&e);
    let top = m.max_string() + 2;
    for p in m.basis() {
        let b = ModuleVector::basis(*p);
        let fail = |law: &str, extra: Value| {
            Err(json!({"lambda": lam(m), "pattern": p.to_string(), "law": law, "detail": extra}))
        };
        for i in [1u8, 2] {
            for j in [1u8, 2] {
                let ef = act(Gen::E, i, 1, &act(Gen::F, j, 1, &b)?)?;
                let fe = act(Gen::F, j, 1, &act(Gen::E, i, 1, &b)?)?;
                let expected =
                    if i == j { b.scale(&RatFunc::from(q_int(p.wt(i)).subs_pow(2))) } else { ModuleVector::zero() };
                if ef.sub(&fe) != expected {
                    return fail("[E_i, F_j]", json!({"i": i, "j": j}));
                }
            }
            let j = 3 - i;
            for g in [Gen::E, Gen::F] {
                let mut total = ModuleVector::zero();
                for r in 0..=2 {
                    let t = act(g, i, 2 - r, &b)?;
                    let t = act(g, j, 1, &t)?;
                    let t = act(g, i, r, &t)?;
                    total.add_scaled(&t, &RatFunc::from_int(if r == 1 { -1 } else { 1 }));
                }
                if !total.is_zero() {
                    return fail("quantum Serre", json!({"gen": gen_name(g), "i": i}));
                }
                for r in 0..=top {
                    for s in 0..=(top - r) {
                        let lhs = act(g, i, r, &act(g, i, s, &b)?)?;
                        let rhs = act(g, i, r + s, &b)?.scale(&RatFunc::from(q_binomial_in_q(r + s, r)));
                        if lhs != rhs {
                            return fail("divided powers", json!({"gen": gen_name(g), "i": i, "r": r, "s": s}));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `X_i^{(r)}` shifts weights by `±r alpha_i`; `T_i^{±}` maps `V(beta)` to `V(s_i beta)`.
pub fn weight_bookkeeping(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let cd = m.cartan();
    for p in m.basis() {
        let b = ModuleVector::basis(*p);
        let beta = Weight(p.weight().to_vec());
        for i in [1u8, 2] {
            let alpha = cd.simple_root(i as usize);
            for r in 1..=m.max_string() {
                for (g, target) in [(Gen::E, &beta + &alpha.scaled(r)), (Gen::F, &beta - &alpha.scaled(r))] {
                    let img = m.act_divided(g, i, r, &b).map_err(&e)?;
                    if img.iter().any(|(q, _)| q.weight().to_vec() != target.0) {
                        return Err(json!({"pattern": p.to_string(), "gen": gen_name(g), "i": i, "r": r}));
                    }
                }
            }
            let target = cd.reflect(i as usize, &beta);
            for sign in Sign::both() {
                let img = m.lusztig_t(i, sign, &b).map_err(&e)?;
                if img.is_zero() || img.iter().any(|(q, _)| q.weight().to_vec() != target.0) {
                    return Err(json!({"pattern": p.to_string(), "law": "T_i maps V(beta) onto V(s_i beta)", "i": i}));
                }
            }
        }
    }
    Ok(())
}

/// `sigma^i` by string flipping, by `N^i` and by the braid-operator formula
/// with both signs, on every basis vector.
pub fn sigma_three_way(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    for i in [1u8, 2] {
        let n = m.matrix_n(i).map_err(&e)?;
        let j = SubsetJ::new([i as usize]);
        for (k, p) in m.basis().iter().enumerate() {
            let b = ModuleVector::basis(*p);
            let by_string = m.sigma_string(i, &b).map_err(&e)?;
            let by_matrix = m.column_vector(&n, k);
            let plus = m.sigma_j(&j, Sign::Plus, &b).map_err(&e)?;
            let minus = m.sigma_j(&j, Sign::Minus, &b).map_err(&e)?;
            for (name, x) in [("N^i", &by_matrix), ("sigma_J +", &plus), ("sigma_J -", &minus)] {
                if *x != by_string {
                    return Err(json!({
                        "lambda": lam(m), "i": i, "pattern": p.to_string(), "construction": name,
                        "string": format!("{by_string:?}"), "other": format!("{x:?}"),
                    }));
                }
            }
        }
    }
    Ok(())
}

/// Relations among `sigma^{1}`, `sigma^{2}`, `sigma^I`: both signs agree, each
/// is an involution, and `sigma^I sigma^i = sigma^{3-i} sigma^I`.
pub fn cactus_relations(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let full = SubsetJ::new([1, 2]);
    for p in m.basis() {
        let b = ModuleVector::basis(*p);
        let fail = |law: &str| Err(json!({"lambda": lam(m), "pattern": p.to_string(), "law": law}));
        let plus = m.sigma_j(&full, Sign::Plus, &b).map_err(&e)?;
        if m.sigma_j(&full, Sign::Minus, &b).map_err(&e)? != plus {
            return fail("sigma^I: + and - agree");
        }
        if m.sigma_j(&full, Sign::Plus, &plus).map_err(&e)? != b {
            return fail("sigma^I is an involution");
        }
        for i in [1u8, 2] {
            let ji = SubsetJ::new([i as usize]);
            let jstar = SubsetJ::new([3 - i as usize]);
            let si = m.sigma_j(&ji, Sign::Plus, &b).map_err(&e)?;
            if m.sigma_j(&ji, Sign::Plus, &si).map_err(&e)? != b {
                return fail("sigma^i is an involution");
            }
            let lhs = m.sigma_j(&full, Sign::Plus, &si).map_err(&e)?;
            let rhs = m.sigma_j(&jstar, Sign::Plus, &plus).map_err(&e)?;
            if lhs != rhs {
                return fail("sigma^I sigma^i = sigma^(i*) sigma^I");
            }
        }
    }
    Ok(())
}

/// `T_1 T_2 T_1 = T_2 T_1 T_2` for both signs, on every basis vector.
pub fn braid_relation(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    for p in m.basis() {
        let b = ModuleVector::basis(*p);
        for sign in Sign::both() {
            let lhs = m.lusztig_t_word(&[1, 2, 1], sign, &b).map_err(&e)?;
            let rhs = m.lusztig_t_word(&[2, 1, 2], sign, &b).map_err(&e)?;
            if lhs != rhs {
                return Err(json!({"lambda": lam(m), "pattern": p.to_string(), "plus": sign == Sign::Plus}));
            }
        }
    }
    Ok(())
}

/// The entry of `N^i` at `(sigma^i(m), m)` lies in `1 + v Q(v)_0` and every other
/// entry of column `m` vanishes at `v = 0`.
pub fn crystal_compatibility(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    for i in [1u8, 2] {
        let n = m.matrix_n(i).map_err(&e)?;
        for (k, p) in m.basis().iter().enumerate() {
            let target = p.sigma_i(i);
            let mut seen = false;
            for (r, x) in n.column(k) {
                let q = m.basis()[*r];
                let (val, ok) = if q == target {
                    seen = true;
                    let d = x - &RatFunc::one();
                    (x, d.is_zero() || d.order_at_zero().is_some_and(|o| o > 0))
                } else {
                    (x, x.order_at_zero().is_some_and(|o| o > 0))
                };
                if !ok {
                    return Err(
                        json!({"lambda": lam(m), "i": i, "col": p.to_string(), "row": q.to_string(), "entry": val}),
                    );
                }
            }
            if !seen {
                return Err(json!({"lambda": lam(m), "i": i, "col": p.to_string(), "missing": target.to_string()}));
            }
        }
    }
    Ok(())
}

fn all_reduced_words(m: &ModuleVLambda, w: &GroupElement) -> Vec<Vec<usize>> {
    let weyl = m.cartan().weyl();
    if weyl.length(w) == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in weyl.index_set().iter() {
        if weyl.is_left_descent(w, i) {
            let rest = weyl.generator(i).expect("index").mul(w);
            for mut tail in all_reduced_words(m, &rest) {
                tail.insert(0, i);
                out.push(tail);
            }
        }
    }
    out
}

/// `[v]_w` does not depend on the reduced word of `w`, for every `w`.
pub fn reduced_word_independence(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let weyl = m.cartan().weyl();
    for w in weyl.elements().map_err(|x| json!(x.to_string()))? {
        let words = all_reduced_words(m, &w);
        let first = m.extremal_vector_word(&words[0]).map_err(&e)?;
        for word in &words[1..] {
            if m.extremal_vector_word(word).map_err(&e)? != first {
                return Err(json!({"lambda": lam(m), "words": [words[0], word]}));
            }
        }
    }
    Ok(())
}

/// The extremal vectors `[v]_w` span a space of dimension `|W lambda|`.
pub fn extremal_independence(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let cd = m.cartan();
    let mut vectors = Vec::new();
    let mut orbit = std::collections::BTreeSet::new();
    for w in cd.weyl().elements().map_err(|x| json!(x.to_string()))? {
        orbit.insert(cd.weyl_act(&w, &m.lambda()).map_err(|x| json!(x.to_string()))?);
        let v = m.extremal_vector(&w).map_err(&e)?;
        if !vectors.contains(&v) {
            vectors.push(v);
        }
    }
    let rank = vector_rank(&vectors);
    if rank != orbit.len() || vectors.len() != orbit.len() {
        return Err(json!({"lambda": lam(m), "rank": rank, "distinct": vectors.len(), "orbit": orbit.len()}));
    }
    Ok(())
}

/// `sigma^i([v]_w) = [v]_{s_i w}` for all `w` and `i`.
pub fn sigma_on_extremal(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let weyl = m.cartan().weyl();
    for w in weyl.elements().map_err(|x| json!(x.to_string()))? {
        let v = m.extremal_vector(&w).map_err(&e)?;
        for i in [1u8, 2] {
            let siw = weyl.generator(i as usize).expect("index").mul(&w);
            if m.sigma_string(i, &v).map_err(&e)? != m.extremal_vector(&siw).map_err(&e)? {
                return Err(json!({"lambda": lam(m), "i": i, "w": weyl.reduced_word(&w)}));
            }
        }
    }
    Ok(())
}

/// `sigma^I(v_lambda) = [v]_{w_0}`.
pub fn sigma_full_on_highest(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let weyl = m.cartan().weyl();
    let w0 = weyl.longest_element(&weyl.index_set()).map_err(|x| json!(x.to_string()))?;
    let lhs = m.sigma_j(&weyl.index_set(), Sign::Plus, &m.highest_vector()).map_err(&e)?;
    if lhs != m.extremal_vector(&w0).map_err(&e)? {
        return Err(json!({"lambda": lam(m), "sigma_I(v_lambda)": format!("{lhs:?}")}));
    }
    Ok(())
}

/// `T_w^+ [v]_{w'} = q^{(w' lambda, rho - w^{-1} rho)/2} [v]_{w w'}` whenever
/// `l(w w') = l(w) + l(w')`.
pub fn braid_on_extremal(m: &ModuleVLambda) -> Result<(), Value> {
    let e = err(m);
    let cd = m.cartan();
    let weyl = cd.weyl();
    let rho = Weight(vec![1, 1]);
    let elems = weyl.elements().map_err(|x| json!(x.to_string()))?;
    for w in &elems {
        let word = weyl.reduced_word(w);
        let w_inv_rho = cd.weyl_act(&weyl.inverse(w), &rho).map_err(|x| json!(x.to_string()))?;
        for w2 in &elems {
            let ww2 = w.mul(w2);
            if weyl.length(&ww2) != weyl.length(w) + weyl.length(w2) {
                continue;
            }
            let w2_lambda = cd.weyl_act(w2, &m.lambda()).map_err(|x| json!(x.to_string()))?;
            let exp = cd.form(&w2_lambda, &(&rho - &w_inv_rho));
            if !exp.is_integer() {
                return Err(json!({"non-integral exponent": exp.to_string()}));
            }
            let k: i32 = exp.to_integer().try_into().expect("small");
            let lhs = m.lusztig_t_word(&word, Sign::Plus, &m.extremal_vector(w2).map_err(&e)?).map_err(&e)?;
            let rhs = m.extremal_vector(&ww2).map_err(&e)?.shift(k);
            if lhs != rhs {
                return Err(json!({"lambda": lam(m), "w": word, "w'": weyl.reduced_word(w2)}));
            }
        }
    }
    Ok(())
}

/// Dimension, weight-space partition and the unique highest pattern.
pub fn module_shape(m: &ModuleVLambda) -> Result<(), Value> {
    let expected = crystal::props::weyl_dimension(m.l1(), m.l2()) as usize;
    if m.dim() != expected {
        return Err(json!({"lambda": lam(m), "dim": m.dim(), "expected": expected}));
    }
    let tops: Vec<&Pattern> = m.basis().iter().filter(|p| p.weight() == [m.l1(), m.l2()]).collect();
    if tops.len() != 1 || *tops[0] != m.highest_pattern() {
        return Err(json!({"lambda": lam(m), "highest": tops.iter().map(|p| p.to_string()).collect::<Vec<_>>()}));
    }
    Ok(())
}
