//! Exhaustive property checks on the finite types used for verification.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::{CoxeterDatum, GroupElement, KernelMode, SubsetJ};

/// Types checked exhaustively.
pub const CHECKED_TYPES: [&str; 9] = ["A1", "A2", "A3", "A4", "B2", "B3", "G2", "A1xA1", "A1xA2"];

/// All subsets of `{1..n}`.
pub fn all_subsets(n: usize) -> Vec<SubsetJ> {
    (0u32..(1 << n)).map(|mask| SubsetJ::new((1..=n).filter(|i| mask & (1 << (i - 1)) != 0))).collect()
}

fn datum(t: &str) -> Result<CoxeterDatum, Value> {
    CoxeterDatum::from_type(t).map_err(|e| json!({"type": t, "error": e.to_string()}))
}

fn err(t: &str, e: crate::CoxeterError) -> Value {
    json!({"type": t, "error": e.to_string()})
}

/// Formula and brute-force kernels coincide for every `J`.
pub fn kernels_agree(t: &str) -> Result<(), Value> {
    let d = datum(t)?;
    for j in all_subsets(d.rank()) {
        let f = d.kernel_parabolic(&j, KernelMode::Formula).map_err(|e| err(t, e))?;
        let b = d.kernel_parabolic(&j, KernelMode::BruteForce).map_err(|e| err(t, e))?;
        if f != b {
            return Err(json!({"type": t, "J": j.to_string(), "formula_order": f.len(), "bruteforce_order": b.len()}));
        }
    }
    Ok(())
}

fn as_set(v: Vec<GroupElement>) -> HashSet<GroupElement> {
    v.into_iter().collect()
}

/// `W_J ∩ W_J' = W_{J ∩ J'}` for all pairs.
pub fn parabolic_intersections(t: &str) -> Result<(), Value> {
    let d = datum(t)?;
    let subsets = all_subsets(d.rank());
    let groups: Vec<HashSet<GroupElement>> =
        subsets.iter().map(|j| d.parabolic_elements(j).map(as_set)).collect::<Result<_, _>>().map_err(|e| err(t, e))?;
    for (a, ga) in subsets.iter().zip(&groups) {
        for (b, gb) in subsets.iter().zip(&groups) {
            let meet: HashSet<GroupElement> = ga.intersection(gb).cloned().collect();
            let expected = as_set(d.parabolic_elements(&a.intersection(b)).map_err(|e| err(t, e))?);
            if meet != expected {
                return Err(json!({"type": t, "J": a.to_string(), "J'": b.to_string()}));
            }
        }
    }
    Ok(())
}

/// For closed `J`, `W = W_J · W_{J-perp}` with unique factorization.
pub fn closed_factorization(t: &str) -> Result<(), Value> {
    let d = datum(t)?;
    let all = as_set(d.elements().map_err(|e| err(t, e))?);
    for j in all_subsets(d.rank()) {
        let (cl, _, perp) = d.topology(&j).map_err(|e| err(t, e))?;
        if cl != j {
            continue;
        }
        let wj = d.parabolic_elements(&j).map_err(|e| err(t, e))?;
        let wp = d.parabolic_elements(&perp).map_err(|e| err(t, e))?;
        let products: HashSet<GroupElement> = wj.iter().flat_map(|u| wp.iter().map(move |u2| u.mul(u2))).collect();
        if products != all || wj.len() * wp.len() != all.len() {
            return Err(json!({"type": t, "J": j.to_string(), "perp": perp.to_string()}));
        }
    }
    Ok(())
}

/// Reduced words have the right length and multiply back to the element.
pub fn reduced_words(t: &str) -> Result<(), Value> {
    let d = datum(t)?;
    for w in d.elements().map_err(|e| err(t, e))? {
        let word = d.reduced_word(&w);
        if word.len() != d.length(&w) || d.from_word(&word).ok().as_ref() != Some(&w) {
            return Err(json!({"type": t, "word": word, "matrix": w.rows()}));
        }
    }
    Ok(())
}

/// Longest elements are involutions with every `j` in `J` a descent, and the
/// star map is an involution preserving the Coxeter matrix.
pub fn longest_and_star(t: &str) -> Result<(), Value> {
    let d = datum(t)?;
    for j in all_subsets(d.rank()) {
        let w0 = d.longest_element(&j).map_err(|e| err(t, e))?;
        if !w0.mul(&w0).is_identity() || !j.iter().all(|i| d.is_left_descent(&w0, i)) {
            return Err(json!({"type": t, "J": j.to_string(), "law": "longest element"}));
        }
        for a in j.iter() {
            let sa = d.star_involution(&j, a).map_err(|e| err(t, e))?;
            if d.star_involution(&j, sa).map_err(|e| err(t, e))? != a {
                return Err(json!({"type": t, "J": j.to_string(), "j": a, "law": "star involution"}));
            }
            for b in j.iter() {
                let sb = d.star_involution(&j, b).map_err(|e| err(t, e))?;
                if d.order(sa, sb) != d.order(a, b) {
                    return Err(json!({"type": t, "J": j.to_string(), "j": a, "k": b, "law": "star preserves m"}));
                }
            }
        }
    }
    Ok(())
}
