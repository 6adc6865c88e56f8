//! Quantum integers, Gaussian binomials and the coefficient families built
//! from them: Kashiwara-operator coefficients `c_{l,k,s}` and the
//! Clebsch-Gordan-type coefficients `C^{(r)}_t(c, d)`.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::laurent::LaurentPoly;
use crate::ratfunc::RatFunc;
use crate::QarithError;

/// `(n)_v = (v^n - v^{-n}) / (v - v^{-1})`, expanded as `sum_j v^{n-1-2j}`.
pub fn q_int(n: i64) -> LaurentPoly {
    if n < 0 {
        return -q_int(-n);
    }
    let n = n as i32;
    LaurentPoly::from_int_terms(&(0..n).map(|j| (n - 1 - 2 * j, 1)).collect::<Vec<_>>())
}

/// `(n)_v! = (1)_v (2)_v ... (n)_v`; 1 for `n <= 0`.
pub fn q_factorial(n: i64) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_int(k))
}

thread_local! {
    static BINOM_CACHE: RefCell<HashMap<(i64, i64, i32), LaurentPoly>> = RefCell::new(HashMap::new());
}

/// Gaussian binomial `binom(n, k)_v`, zero unless `0 <= k <= n`.
///
/// Computed by the q-Pascal recurrence
/// `binom(n,k) = v^{-k} binom(n-1,k) + v^{n-k} binom(n-1,k-1)`, which never
/// leaves the Laurent ring.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    binomial_in(n, k, 1)
}

/// `binom(n, k)_q` with `q = v^2`.
pub fn q_binomial_in_q(n: i64, k: i64) -> LaurentPoly {
    binomial_in(n, k, 2)
}

fn binomial_in(n: i64, k: i64, unit: i32) -> LaurentPoly {
    if k < 0 || n < k {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k);
    if k == 0 {
        return LaurentPoly::one();
    }
    if let Some(hit) = BINOM_CACHE.with(|c| c.borrow().get(&(n, k, unit)).cloned()) {
        return hit;
    }
    let a = binomial_in(n - 1, k, unit).shift(-(k as i32) * unit);
    let b = binomial_in(n - 1, k - 1, unit).shift((n - k) as i32 * unit);
    let result = &a + &b;
    BINOM_CACHE.with(|c| c.borrow_mut().insert((n, k, unit), result.clone()));
    result
}

/// Which Kashiwara coefficient family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    Low,
    Up,
}

/// A point `(l, k, s)`; it lies in the domain `D` iff `k - l <= s <= k <= l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StringTriple {
    pub l: i64,
    pub k: i64,
    pub s: i64,
}

impl StringTriple {
    pub fn new(l: i64, k: i64, s: i64) -> Self {
        StringTriple { l, k, s }
    }

    pub fn in_domain(&self) -> bool {
        self.l >= 0 && self.k - self.l <= self.s && self.s <= self.k && self.k <= self.l
    }
}

/// `(n)_z` evaluated at `z = at`.
fn q_int_at(n: i64, at: &LaurentPoly) -> Result<RatFunc, QarithError> {
    if at.is_monomial() {
        return Ok(q_int(n).compose(at)?.into());
    }
    let z = RatFunc::from(at.clone());
    let sign = if n < 0 { -1 } else { 1 };
    let n = n.abs();
    let mut acc = RatFunc::zero();
    for j in 0..n {
        acc += &z.pow((n - 1 - 2 * j) as i32)?;
    }
    Ok(acc.scale(&num_rational::BigRational::from_integer(sign.into())))
}

/// `(hi)_z! / (lo)_z!` for `0 <= lo`, `0 <= hi`.
fn factorial_ratio(hi: i64, lo: i64, at: &LaurentPoly) -> Result<RatFunc, QarithError> {
    let mut r = RatFunc::one();
    for n in (lo.min(hi) + 1)..=(lo.max(hi)) {
        r = &r * &q_int_at(n, at)?;
    }
    if hi < lo {
        r = r.inv()?;
    }
    Ok(r)
}

/// `c^{low}_{l,k,s} = (k)_z!/(k-s)_z!` and `c^{up}_{l,k,s} = (l-k+s)_z!/(l-k)_z!`,
/// zero off the domain `D`.
pub fn kash_coeff(kind: CoeffKind, t: StringTriple, at: &LaurentPoly) -> Result<RatFunc, QarithError> {
    if !t.in_domain() {
        return Ok(RatFunc::zero());
    }
    let StringTriple { l, k, s } = t;
    match kind {
        CoeffKind::Low => factorial_ratio(k, k - s, at),
        CoeffKind::Up => factorial_ratio(l - k + s, l - k, at),
    }
}

/// The normalized coefficient `c_{l,k,s} (k-s)_z! / (k)_z!`.
pub fn kash_coeff_underline(kind: CoeffKind, t: StringTriple, at: &LaurentPoly) -> Result<RatFunc, QarithError> {
    let c = kash_coeff(kind, t, at)?;
    if c.is_zero() {
        return Ok(c);
    }
    Ok(&c * &factorial_ratio(t.k - t.s, t.k, at)?)
}

/// `C^{(r)}_t(c, d)`: `binom(c,t) binom(d-t,r-t)` when `d - c >= r`, else
/// `binom(d-c,t) binom(d-t,r)`, with binomials taken at `z = at` (a monomial).
pub fn cg_coeff(r: i64, t: i64, c: i64, d: i64, at: &LaurentPoly) -> Result<LaurentPoly, QarithError> {
    let (x, y) = if d - c >= r {
        (q_binomial(c, t), q_binomial(d - t, r - t))
    } else {
        (q_binomial(d - c, t), q_binomial(d - t, r))
    };
    let p = &x * &y;
    if at == &LaurentPoly::v() {
        return Ok(p);
    }
    p.compose(at)
}

/// `C^{(r)}_t(c, d)` with binomials in `q = v^2`, the form used by the sl3 module action.
pub fn cg_coeff_q(r: i64, t: i64, c: i64, d: i64) -> LaurentPoly {
    if d - c >= r {
        &q_binomial_in_q(c, t) * &q_binomial_in_q(d - t, r - t)
    } else {
        &q_binomial_in_q(d - c, t) * &q_binomial_in_q(d - t, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(t)
    }

    #[test]
    fn q_int_values() {
        assert!(q_int(0).is_zero());
        assert!(q_int(1).is_one());
        assert_eq!(q_int(3), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(q_int(-3), -q_int(3));
    }

    #[test]
    fn binomial_conventions() {
        assert!(q_binomial(5, 0).is_one());
        assert_eq!(q_binomial(2, 1), lp(&[(1, 1), (-1, 1)]));
        assert!(q_binomial(1, 2).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
        assert!(q_binomial(3, -1).is_zero());
    }

    #[test]
    fn binomial_in_q_substitutes() {
        assert_eq!(q_binomial_in_q(4, 2), q_binomial(4, 2).subs_pow(2));
    }

    #[test]
    fn kash_examples() {
        let v = LaurentPoly::v();
        assert!(kash_coeff(CoeffKind::Low, StringTriple::new(2, 1, 1), &v).unwrap().is_one());
        assert!(kash_coeff(CoeffKind::Up, StringTriple::new(1, 1, 1), &v).unwrap().is_one());
        assert!(kash_coeff(CoeffKind::Low, StringTriple::new(1, 2, 0), &v).unwrap().is_zero());
        assert!(kash_coeff(CoeffKind::Up, StringTriple::new(1, 2, 0), &v).unwrap().is_zero());
        let u = kash_coeff_underline(CoeffKind::Up, StringTriple::new(2, 2, 1), &v).unwrap();
        assert_eq!(u, RatFunc::from(q_int(2)).inv().unwrap());
    }

    #[test]
    fn cg_examples() {
        let v = LaurentPoly::v();
        assert!(cg_coeff(1, 1, 0, 2, &v).unwrap().is_zero());
        assert!(cg_coeff(1, 1, 1, 3, &v).unwrap().is_one());
        assert!(cg_coeff(1, 1, 1, 1, &v).unwrap().is_zero());
    }

    #[test]
    fn non_monomial_point() {
        let at = lp(&[(0, 1), (1, 1)]);
        let c = kash_coeff(CoeffKind::Low, StringTriple::new(3, 2, 2), &at).unwrap();
        // (2)_z! at z = 1 + v is z + 1/z
        let z = RatFunc::from(at.clone());
        assert_eq!(c, &z + &z.inv().unwrap());
    }
}
