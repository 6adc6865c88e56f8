//! Straightening of words in the generators into normal order.

use qarith::RatFunc;

use crate::{GKElement, Gen, GkError, Monomial};

/// Rewriting steps allowed per call before giving up.
pub const DEFAULT_FUEL: usize = 1_000_000;

/// Which out-of-order adjacent pair to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// The rewrite of an adjacent pair `ab`, as `(v-exponent, replacement)` terms,
/// or `None` when the pair is already in normal order.
pub(crate) fn rule(a: Gen, b: Gen) -> Option<Vec<(i32, [Gen; 2])>> {
    use Gen::*;
    let one = |x: i32| Some(vec![(x, [b, a])]);
    match (a, b) {
        (Z1, Z2) => Some(vec![(0, [Z12, V1]), (-2, [Z21, V2])]),
        (Z2, Z1) => Some(vec![(0, [Z21, V2]), (-2, [Z12, V1])]),
        _ if a <= b => None,
        // v_i z_j = q^{-delta_ij} z_j v_i
        (V1, Z1) | (V2, Z2) => one(-2),
        (V1, Z2) | (V2, Z1) => one(0),
        // v_i z_jk = q^{-1} z_jk v_i
        (V1 | V2, Z12 | Z21) => one(-2),
        (V2, V1) => one(0),
        (Z21, Z12) => one(0),
        // z_ij z_k = q^{delta_jk} z_k z_ij
        (Z12, Z2) | (Z21, Z1) => one(2),
        (Z12, Z1) | (Z21, Z2) => one(0),
        _ => unreachable!("pair ({a:?}, {b:?}) is ordered"),
    }
}

fn find_pair(word: &[Gen], strategy: Strategy) -> Option<usize> {
    let bad = |p: &usize| rule(word[*p], word[*p + 1]).is_some();
    let n = word.len().saturating_sub(1);
    match strategy {
        Strategy::Leftmost => (0..n).find(bad),
        Strategy::Rightmost => (0..n).rev().find(bad),
    }
}

/// Normal form of a word, rewriting one adjacent pair at a time.
pub fn normal_form(word: &[Gen], strategy: Strategy, fuel: usize) -> Result<GKElement, GkError> {
    let mut out = GKElement::zero();
    let mut stack: Vec<(i32, Vec<Gen>)> = vec![(0, word.to_vec())];
    let mut steps = 0usize;
    while let Some((k, w)) = stack.pop() {
        match find_pair(&w, strategy) {
            None => out.add_term(Monomial::from_word(&w), &RatFunc::v_pow(k)),
            Some(p) => {
                steps += 1;
                if steps > fuel {
                    return Err(GkError::FuelExhausted(fuel));
                }
                for (e, rep) in rule(w[p], w[p + 1]).expect("pair is out of order") {
                    let mut w2 = Vec::with_capacity(w.len());
                    w2.extend_from_slice(&w[..p]);
                    w2.extend_from_slice(&rep);
                    w2.extend_from_slice(&w[p + 2..]);
                    stack.push((k + e, w2));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_unordered_pair_has_a_rule() {
        for a in Gen::ALL {
            for b in Gen::ALL {
                let r = rule(a, b);
                assert_eq!(r.is_some(), a > b || (a, b) == (Gen::Z1, Gen::Z2), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn fuel_is_enforced() {
        let w = [Gen::V2, Gen::V1, Gen::Z2, Gen::Z1];
        assert_eq!(normal_form(&w, Strategy::Leftmost, 1), Err(GkError::FuelExhausted(1)));
    }
}
