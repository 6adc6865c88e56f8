//! Rational functions in `v` kept in canonical form.
//!
//! Canonical form: the denominator is an ordinary polynomial with nonzero
//! constant term and leading coefficient 1, any power of `v` lives in the
//! numerator, and numerator and denominator are coprime. Two rational
//! functions are equal iff their canonical forms are structurally equal.
//! Arithmetic follows Henrici's gcd-saving formulas.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::poly;
use crate::QarithError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

/// Split a nonzero Laurent polynomial as `v^low * p(v)` with `p(0) != 0`.
fn split(l: &LaurentPoly) -> (i32, &[BigRational]) {
    (l.low_raw(), l.dense())
}

fn poly(p: Vec<BigRational>) -> LaurentPoly {
    LaurentPoly::from_dense(0, p)
}

/// `l / g` for a monic polynomial `g` dividing the polynomial part of `l`.
fn div_laurent(l: &LaurentPoly, g: &[BigRational]) -> LaurentPoly {
    if poly::is_one(g) {
        return l.clone();
    }
    let (s, p) = split(l);
    LaurentPoly::from_dense(s, poly::div_monic(p, g))
}

fn gcd_laurent(l: &LaurentPoly, d: &LaurentPoly) -> Vec<BigRational> {
    poly::gcd(l.dense(), d.dense())
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n).into()
    }

    pub fn from_rational(c: BigRational) -> Self {
        LaurentPoly::constant(c).into()
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        LaurentPoly::v_pow(k).into()
    }

    /// Canonical form of `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QarithError> {
        if den.is_zero() {
            return Err(QarithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (a, np) = split(&num);
        let (b, dp) = split(&den);
        let g = poly::gcd(np, dp);
        let np = poly::div_monic(np, &g);
        let dp = poly::div_monic(dp, &g);
        let lc = dp.last().unwrap().clone();
        let np: Vec<BigRational> = np.into_iter().map(|c| c / &lc).collect();
        let dp: Vec<BigRational> = dp.into_iter().map(|c| c / &lc).collect();
        Ok(RatFunc { num: LaurentPoly::from_dense(a - b, np), den: poly(dp) })
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Result<Self, QarithError> {
        if self.is_zero() {
            return Err(QarithError::DivisionByZero);
        }
        let (a, np) = split(&self.num);
        let lc = np.last().unwrap().clone();
        let den: Vec<BigRational> = np.iter().map(|c| c / &lc).collect();
        let num = self.den.scale(&lc.recip()).shift(-a);
        Ok(RatFunc { num, den: poly(den) })
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, QarithError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<Self, QarithError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        Ok(RatFunc { num: base.num.pow(n.unsigned_abs()), den: base.den.pow(n.unsigned_abs()) })
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        RatFunc { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, QarithError> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(QarithError::EvalAtPole);
        }
        Ok(self.num.eval(x)? / d)
    }

    /// Order of vanishing at `v = 0` (negative for a pole); `None` for zero.
    pub fn order_at_zero(&self) -> Option<i32> {
        self.num.low_exp()
    }

    /// Value at `v = 0`, defined when the function is regular there.
    pub fn value_at_zero(&self) -> Result<BigRational, QarithError> {
        match self.order_at_zero() {
            None => Ok(BigRational::zero()),
            Some(k) if k > 0 => Ok(BigRational::zero()),
            Some(0) => Ok(self.num.coeff(0) / self.den.coeff(0)),
            Some(_) => Err(QarithError::EvalAtPole),
        }
    }

    /// Replace `v` by `v^{-1}`.
    pub fn bar(&self) -> Self {
        RatFunc::new(self.num.bar(), self.den.bar()).expect("nonzero denominator")
    }

    /// Total degree span, used as a pivot-size heuristic.
    pub fn size_hint(&self) -> usize {
        self.num.dense().len() + self.den.dense().len()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(num: LaurentPoly) -> Self {
        RatFunc { num, den: LaurentPoly::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<BigInt> for RatFunc {
    fn from(n: BigInt) -> Self {
        RatFunc::from_rational(BigRational::from_integer(n))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            if n.is_zero() || self.den.is_one() {
                return RatFunc { num: n, den: self.den.clone() };
            }
            let g = gcd_laurent(&n, &self.den);
            return RatFunc { num: div_laurent(&n, &g), den: div_laurent(&self.den, &g) };
        }
        let g = poly::gcd(self.den.dense(), rhs.den.dense());
        if poly::is_one(&g) {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc { num, den: &self.den * &rhs.den };
        }
        let b1 = div_laurent(&self.den, &g);
        let d1 = div_laurent(&rhs.den, &g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = gcd_laurent(&num, &poly(g));
        RatFunc { num: div_laurent(&num, &h), den: &b1 * &div_laurent(&rhs.den, &h) }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        let g1 = if rhs.den.is_one() { vec![BigRational::one()] } else { gcd_laurent(&self.num, &rhs.den) };
        let g2 = if self.den.is_one() { vec![BigRational::one()] } else { gcd_laurent(&rhs.num, &self.den) };
        let num = &div_laurent(&self.num, &g1) * &div_laurent(&rhs.num, &g2);
        let den = &div_laurent(&self.den, &g2) * &div_laurent(&rhs.den, &g1);
        RatFunc { num, den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(t)
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let r = RatFunc::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(r, lp(&[(1, 1), (0, 1)]).into());
        assert!(r.is_laurent());
    }

    #[test]
    fn normalize_zero_numerator() {
        let r = RatFunc::new(LaurentPoly::zero(), lp(&[(3, 1)])).unwrap();
        assert!(r.is_zero());
        assert!(RatFunc::new(lp(&[(0, 1)]), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn denominator_is_monic_with_constant_term() {
        // (v) / (2 v^3 + 4 v) = 1 / (2 v^2 + 4) = (1/2) / (v^2 + 2)
        let r = RatFunc::new(lp(&[(1, 1)]), lp(&[(3, 2), (1, 4)])).unwrap();
        assert_eq!(r.denom(), &lp(&[(2, 1), (0, 2)]));
        assert_eq!(r.numer().coeff(0), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn inverse_roundtrip() {
        let r = RatFunc::new(lp(&[(-1, 1), (1, 1)]), lp(&[(0, 1), (1, 3)])).unwrap();
        assert!((&r * &r.inv().unwrap()).is_one());
        assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn sum_with_shared_denominator_factor() {
        // 1/(v-1) - 1/((v-1)(v+1)) = v/((v-1)(v+1))
        let a = RatFunc::new(lp(&[(0, 1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        let b = RatFunc::new(lp(&[(0, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        let expect = RatFunc::new(lp(&[(1, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(&a - &b, expect);
    }

    #[test]
    fn value_at_zero_and_order() {
        let r = RatFunc::new(lp(&[(0, 3), (1, 1)]), lp(&[(0, 2), (1, 1)])).unwrap();
        assert_eq!(r.order_at_zero(), Some(0));
        assert_eq!(r.value_at_zero().unwrap(), BigRational::new(3.into(), 2.into()));
        assert!(RatFunc::v_pow(-1).value_at_zero().is_err());
    }
}
