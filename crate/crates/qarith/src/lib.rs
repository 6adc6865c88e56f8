//! Exact arithmetic in the field Q(v), where `v = q^{1/2}`.
//!
//! Every exponent of `q` that shows up (including half-integral ones) is
//! stored as an integer exponent of `v`. [`LaurentPoly`] covers Q[v, v^{-1}];
//! [`RatFunc`] covers Q(v) in a canonical form so that equality is structural.

mod json;
mod laurent;
mod poly;
pub mod props;
mod qnum;
mod ratfunc;

pub use json::{fraction_string, parse_fraction};
pub use laurent::LaurentPoly;
pub use qnum::{
    cg_coeff, cg_coeff_q, kash_coeff, kash_coeff_underline, q_binomial, q_binomial_in_q, q_factorial, q_int, CoeffKind,
    StringTriple,
};
pub use ratfunc::RatFunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QarithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole")]
    EvalAtPole,
    #[error("substitution requires an invertible monomial")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Canonical form of `num / den`.
pub fn rf_normalize(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc, QarithError> {
    RatFunc::new(num, den)
}

/// `q = v^2` as a Laurent polynomial.
pub fn q() -> LaurentPoly {
    LaurentPoly::v_pow(2)
}
