//! Seeded property checks for the crystal operators.

use rand::Rng;
use serde_json::{json, Value};

use crate::{enumerate_component, Pattern};

/// Random ambient pattern: `m1, m2` in `[0, bound]` with one of them zero,
/// the other four entries in `[-bound, bound]`.
pub fn random_pattern<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Pattern {
    let a = rng.gen_range(0..=bound);
    let (m1, m2) = if rng.gen_bool(0.5) { (a, 0) } else { (0, a) };
    let mut z = || rng.gen_range(-bound..=bound);
    Pattern { m1, m2, m12: z(), m21: z(), m01: z(), m02: z() }
}

/// Random basis pattern (all entries nonnegative).
pub fn random_basis_pattern<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Pattern {
    let a = rng.gen_range(0..=bound);
    let (m1, m2) = if rng.gen_bool(0.5) { (a, 0) } else { (0, a) };
    let mut z = || rng.gen_range(0..=bound);
    Pattern { m1, m2, m12: z(), m21: z(), m01: z(), m02: z() }
}

fn witness(law: &str, m: &Pattern, r: i64, s: i64) -> Value {
    json!({"law": law, "pattern": m.to_string(), "r": r, "s": s})
}

/// Every identity of the crystal operators on `samples` random patterns with
/// entries bounded by `bound` and shifts `|r|, |s| <= shift`.
pub fn operator_identities<R: Rng + ?Sized>(rng: &mut R, samples: usize, bound: i64, shift: i64) -> Result<(), Value> {
    for _ in 0..samples {
        let m = random_pattern(rng, bound);
        let r = rng.gen_range(-shift..=shift);
        let s = rng.gen_range(-shift..=shift);
        let fail = |law: &str| Err(witness(law, &m, r, s));
        for i in [1u8, 2] {
            let j = 3 - i;
            if m.e_pow(i, s).e_pow(i, r) != m.e_pow(i, r + s) {
                return fail("e_i^r e_i^s = e_i^(r+s)");
            }
            if m.e_pow(i, 0) != m {
                return fail("e_i^0 = id");
            }
            let e = m.e_pow(i, r);
            if Pattern::new(e.m1, e.m2, e.m12, e.m21, e.m01, e.m02).is_err() {
                return fail("e_i^r stays in the ambient set");
            }
            if (e.l1(), e.l2()) != (m.l1(), m.l2()) {
                return fail("e_i^r preserves (l1, l2)");
            }
            if e.wt(i) != m.wt(i) + 2 * r || e.wt(j) != m.wt(j) - r {
                return fail("e_i^r shifts the weight by r alpha_i");
            }
            if m.sigma_i(i).sigma_i(i) != m {
                return fail("sigma^i is an involution");
            }
            if m.sigma_i(i).wt(i) != -m.wt(i) {
                return fail("sigma^i negates wt_i");
            }
            if m.e_pow(i, r).sigma_i(i) != m.sigma_i(i).e_pow(i, -r) {
                return fail("sigma^i e_i^r = e_i^(-r) sigma^i");
            }
            if m.e_pow(i, r).sigma_outer() != m.sigma_outer().e_pow(j, -r) {
                return fail("sigma e_i^r = e_j^(-r) sigma");
            }
            if m.sigma_outer().sigma_i(i) != m.sigma_i(j).sigma_outer() {
                return fail("sigma^i sigma = sigma sigma^j");
            }
            if m.sigma_outer().wt(i) != -m.wt(j) {
                return fail("wt_i(sigma m) = -wt_j(m)");
            }
        }
        if m.sigma_outer().sigma_outer() != m {
            return fail("sigma is an involution");
        }
        if m.e_pow(1, s).e_pow(2, r + s).e_pow(1, r) != m.e_pow(2, r).e_pow(1, r + s).e_pow(2, s) {
            return fail("e_1^r e_2^(r+s) e_1^s = e_2^s e_1^(r+s) e_2^r");
        }
        let lhs = m.sigma_i(1).sigma_i(2).sigma_i(1);
        if lhs != m.sigma_i(2).sigma_i(1).sigma_i(2) {
            return fail("sigma^1 sigma^2 sigma^1 = sigma^2 sigma^1 sigma^2");
        }
        if m.khat().khat_inv().ok() != Some(m) {
            return fail("khat roundtrip");
        }
        let g = m.khat();
        let g2 = m.e_pow(2, r).khat();
        if (g2.a1, g2.a2, g2.a3, g2.l1, g2.l2) != (g.a1, g.a2 - r, g.a3, g.l1, g.l2) {
            return fail("e_2^r lowers a2 by r");
        }
    }
    Ok(())
}

/// The outer involution and `sigma^i` map basis patterns to basis patterns.
pub fn basis_preserved<R: Rng + ?Sized>(rng: &mut R, samples: usize, bound: i64) -> Result<(), Value> {
    for _ in 0..samples {
        let m = random_basis_pattern(rng, bound);
        for (name, img) in [("sigma", m.sigma_outer()), ("sigma1", m.sigma_i(1)), ("sigma2", m.sigma_i(2))] {
            if !img.is_basis() {
                return Err(json!({"law": "basis preserved", "op": name, "pattern": m.to_string()}));
            }
        }
    }
    Ok(())
}

/// `dim V_{l1,l2}` by the Weyl dimension formula, computed from the
/// positive roots of sl3 independently of any pattern enumeration.
pub fn weyl_dimension(l1: i64, l2: i64) -> i64 {
    // prod over positive roots of (lambda + rho, beta^vee) / (rho, beta^vee)
    let coroot_pairings = [(1, 0), (0, 1), (1, 1)];
    let num: i64 = coroot_pairings.iter().map(|(a, b)| a * (l1 + 1) + b * (l2 + 1)).product();
    let den: i64 = coroot_pairings.iter().map(|(a, b)| a + b).product();
    num / den
}

/// Component sizes agree with the Weyl dimension formula and with the closed
/// form `(l1+1)(l2+1)(l1+l2+2)/2`, for `l1 + l2 <= max_degree`.
pub fn component_sizes(max_degree: i64) -> Result<(), Value> {
    for l1 in 0..=max_degree {
        for l2 in 0..=(max_degree - l1) {
            let n = enumerate_component(l1, l2).len() as i64;
            let closed = (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) / 2;
            if n != weyl_dimension(l1, l2) || n != closed {
                return Err(json!({"l1": l1, "l2": l2, "count": n, "weyl": weyl_dimension(l1, l2)}));
            }
        }
    }
    Ok(())
}

/// The zero-weight space has `min(l1,l2)+1` patterns when `l1 = l2 mod 3` and none otherwise.
pub fn zero_weight_counts(max_degree: i64) -> Result<(), Value> {
    for l1 in 0..=max_degree {
        for l2 in 0..=(max_degree - l1) {
            let n = enumerate_component(l1, l2).iter().filter(|m| m.weight() == [0, 0]).count() as i64;
            let expected = if (l1 - l2) % 3 == 0 { l1.min(l2) + 1 } else { 0 };
            if n != expected {
                return Err(json!({"l1": l1, "l2": l2, "count": n, "expected": expected}));
            }
        }
    }
    Ok(())
}

/// Every operator maps a component into itself (basis patterns may leave the
/// basis only for `e_i^r`).
pub fn components_closed(max_degree: i64) -> Result<(), Value> {
    for l1 in 0..=max_degree {
        for l2 in 0..=(max_degree - l1) {
            let comp = enumerate_component(l1, l2);
            let set: std::collections::HashSet<_> = comp.iter().copied().collect();
            for m in &comp {
                for img in [m.sigma_outer(), m.sigma_i(1), m.sigma_i(2)] {
                    if !set.contains(&img) {
                        return Err(json!({"l1": l1, "l2": l2, "pattern": m.to_string(), "image": img.to_string()}));
                    }
                }
                if set.iter().filter(|x| x.weight() == [l1, l2]).count() != 1 {
                    return Err(json!({"l1": l1, "l2": l2, "law": "unique highest weight"}));
                }
            }
        }
    }
    Ok(())
}
