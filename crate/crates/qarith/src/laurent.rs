//! Laurent polynomials in a single variable `v` with rational coefficients.
//!
//! Stored densely: `coeffs[k]` is the coefficient of `v^(low + k)`. The first
//! and last stored coefficients are nonzero; the zero polynomial has no
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::QarithError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable `v` itself.
    pub fn v() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// `c * v^k`.
    pub fn monomial(k: i32, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: k, coeffs: vec![c] }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(k, BigRational::one())
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let terms: Vec<(i32, BigRational)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    /// Build from integer `(exponent, coefficient)` pairs.
    pub fn from_int_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, c)| (k, BigRational::from_integer(BigInt::from(c)))))
    }

    pub(crate) fn from_dense(low: i32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly { low: low + lead_zeros as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True if this is `c * v^k` for some nonzero `c`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> BigRational {
        let idx = k - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&BigRational> {
        self.coeffs.first()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i32, c))
    }

    /// Dense coefficient slice starting at `low_exp`.
    pub(crate) fn dense(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub(crate) fn low_raw(&self) -> i32 {
        self.low
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitute `v -> v^e` (e may be negative).
    pub fn subs_pow(&self, e: i32) -> Self {
        if e == 1 {
            return self.clone();
        }
        Self::from_terms(self.terms().map(|(k, c)| (k * e, c.clone())))
    }

    /// Substitute `v -> p` and return the resulting Laurent polynomial.
    /// Negative exponents require `p` to be a monomial.
    pub fn compose(&self, p: &LaurentPoly) -> Result<Self, QarithError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.low < 0 && !p.is_monomial() {
            return Err(QarithError::NotInvertible);
        }
        let pinv = if self.low < 0 { Some(p.monomial_inverse()) } else { None };
        let mut acc = Self::zero();
        for (k, c) in self.terms() {
            let base = if k < 0 { pinv.as_ref().unwrap() } else { p };
            acc += &base.pow(k.unsigned_abs()).scale(c);
        }
        Ok(acc)
    }

    fn monomial_inverse(&self) -> Self {
        debug_assert!(self.is_monomial());
        Self::monomial(-self.low, self.coeffs[0].recip())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluate at a rational point. Fails at `v = 0` when negative powers occur.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, QarithError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() {
            if self.low < 0 {
                return Err(QarithError::EvalAtPole);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc * pow_signed(x, self.low))
    }

    /// Replace `v` by `v^{-1}`.
    pub fn bar(&self) -> Self {
        self.subs_pow(-1)
    }
}

fn pow_signed(x: &BigRational, k: i32) -> BigRational {
    let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

fn add_into(target: &mut LaurentPoly, other: &LaurentPoly, negate: bool) {
    if other.is_zero() {
        return;
    }
    if target.is_zero() {
        *target = if negate { -other } else { other.clone() };
        return;
    }
    let lo = target.low.min(other.low);
    let hi = target.high_exp().unwrap().max(other.high_exp().unwrap());
    if lo < target.low {
        let pad = (target.low - lo) as usize;
        let mut v = vec![BigRational::zero(); pad];
        v.append(&mut target.coeffs);
        target.coeffs = v;
        target.low = lo;
    }
    let len = (hi - lo + 1) as usize;
    target.coeffs.resize(len, BigRational::zero());
    let off = (other.low - lo) as usize;
    for (i, c) in other.coeffs.iter().enumerate() {
        if negate {
            target.coeffs[off + i] -= c;
        } else {
            target.coeffs[off + i] += c;
        }
    }
    let t = std::mem::take(target);
    *target = LaurentPoly::from_dense(t.low, t.coeffs);
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::from_int(n)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = a.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write_vpow(f, k)?,
                (_, false) => {
                    write!(f, "{a}*")?;
                    write_vpow(f, k)?;
                }
            }
        }
        Ok(())
    }
}

fn write_vpow(f: &mut fmt::Formatter<'_>, k: i32) -> fmt::Result {
    if k == 1 {
        write!(f, "v")
    } else {
        write!(f, "v^{k}")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
