//! The Gelfand-Kirillov model `C_q(sl3)`: the algebra on `z1, z2, z12, z21, v1, v2`
//! with its straightening relations, the module-algebra action of `E_k, F_k`
//! by twisted derivations, the basis elements `b_m` and the anti-involution
//! `sigma_hat`.

use std::collections::BTreeMap;
use std::fmt;

use crystal::Pattern;
use qarith::{q_factorial, RatFunc};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use serde_json::json;

mod parse;
pub mod props;
mod rewrite;

pub use parse::parse_expr;
pub use rewrite::{normal_form, Strategy, DEFAULT_FUEL};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GkError {
    #[error("rewriting ran out of fuel after {0} steps")]
    FuelExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator index {0} is not 1 or 2")]
    BadIndex(u8),
}

/// Generators in normal order `z1 < z2 < z12 < z21 < v1 < v2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Z1,
    Z2,
    Z12,
    Z21,
    V1,
    V2,
}

impl Gen {
    pub const ALL: [Gen; 6] = [Gen::Z1, Gen::Z2, Gen::Z12, Gen::Z21, Gen::V1, Gen::V2];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Grading in fundamental coordinates: `|v_i| = w_i`, `|z_i| = w_i - a_i`,
    /// `|z_ij| = w_j - a_i - a_j`.
    pub fn weight(self) -> [i64; 2] {
        match self {
            Gen::Z1 => [-1, 1],
            Gen::Z2 => [1, -1],
            Gen::Z12 => [-1, 0],
            Gen::Z21 => [0, -1],
            Gen::V1 => [1, 0],
            Gen::V2 => [0, 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Z1 => "z1",
            Gen::Z2 => "z2",
            Gen::Z12 => "z12",
            Gen::Z21 => "z21",
            Gen::V1 => "v1",
            Gen::V2 => "v2",
        }
    }

    /// Image under `sigma_hat`: `z_i -> z_i`, `z_ij -> v_j`, `v_i -> z_ji`.
    pub fn sigma_hat(self) -> Gen {
        match self {
            Gen::Z1 => Gen::Z1,
            Gen::Z2 => Gen::Z2,
            Gen::Z12 => Gen::V2,
            Gen::Z21 => Gen::V1,
            Gen::V1 => Gen::Z21,
            Gen::V2 => Gen::Z12,
        }
    }
}

/// A normal-ordered monomial `z1^a z2^b z12^c z21^d v1^e v2^f`; exponents
/// are listed in the same order as the entries of a [`Pattern`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u32; 6]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 6])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weight(&self) -> [i64; 2] {
        let mut w = [0, 0];
        for g in Gen::ALL {
            let e = self.0[g.index()] as i64;
            w[0] += e * g.weight()[0];
            w[1] += e * g.weight()[1];
        }
        w
    }

    /// The word with generators in normal order.
    pub fn word(&self) -> Vec<Gen> {
        Gen::ALL.iter().flat_map(|g| std::iter::repeat_n(*g, self.0[g.index()] as usize)).collect()
    }

    pub fn from_word(word: &[Gen]) -> Self {
        let mut e = [0; 6];
        for g in word {
            e[g.index()] += 1;
        }
        Monomial(e)
    }

    pub fn to_pattern(&self) -> Pattern {
        let a = self.0.map(i64::from);
        Pattern { m1: a[0], m2: a[1], m12: a[2], m21: a[3], m01: a[4], m02: a[5] }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Gen::ALL
            .iter()
            .filter(|g| self.0[g.index()] > 0)
            .map(|g| match self.0[g.index()] {
                1 => g.name().to_string(),
                e => format!("{}^{e}", g.name()),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A combination of normal-ordered monomials.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GKElement(BTreeMap<Monomial, RatFunc>);

impl GKElement {
    pub fn zero() -> Self {
        GKElement(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), RatFunc::one())
    }

    pub fn monomial(m: Monomial, c: RatFunc) -> Self {
        let mut x = Self::zero();
        x.add_term(m, &c);
        x
    }

    pub fn generator(g: Gen) -> Self {
        Self::monomial(Monomial::from_word(&[g]), RatFunc::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFunc)> {
        self.0.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFunc {
        self.0.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &GKElement, c: &RatFunc) {
        for (m, x) in &other.0 {
            self.add_term(*m, &(x * c));
        }
    }

    pub fn add(&self, other: &GKElement) -> GKElement {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::one());
        out
    }

    pub fn sub(&self, other: &GKElement) -> GKElement {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::from_int(-1));
        out
    }

    pub fn scale(&self, c: &RatFunc) -> GKElement {
        let mut out = GKElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// The unique weight if nonzero and homogeneous.
    pub fn homogeneous_weight(&self) -> Option<[i64; 2]> {
        let mut it = self.0.keys().map(Monomial::weight);
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    /// Product via concatenation and straightening.
    pub fn mul(&self, rhs: &GKElement) -> Result<GKElement, GkError> {
        let mut out = GKElement::zero();
        for (a, x) in &self.0 {
            for (b, y) in &rhs.0 {
                let mut word = a.word();
                word.extend(b.word());
                out.add_scaled(&normal_form(&word, Strategy::Leftmost, DEFAULT_FUEL)?, &(x * y));
            }
        }
        Ok(out)
    }

    /// `sigma_hat`: reverse each word, map the generators, straighten.
    pub fn sigma_hat(&self) -> Result<GKElement, GkError> {
        let mut out = GKElement::zero();
        for (m, c) in &self.0 {
            let word: Vec<Gen> = m.word().iter().rev().map(|g| g.sigma_hat()).collect();
            out.add_scaled(&normal_form(&word, Strategy::Leftmost, DEFAULT_FUEL)?, c);
        }
        Ok(out)
    }

    /// The element as `[{monomial, coeff}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl fmt::Debug for GKElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(m, c)| format!("({c}) {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for GKElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (m, c) in &self.0 {
            seq.serialize_element(&json!({"monomial": m.0, "coeff": c}))?;
        }
        seq.end()
    }
}

/// Raising or lowering operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
}

/// `E_k`, `F_k` on a generator.
fn act_on_gen(k: u8, op: Op, g: Gen) -> Option<Gen> {
    match (op, g) {
        (Op::E, Gen::Z1) if k == 1 => Some(Gen::V1),
        (Op::E, Gen::Z2) if k == 2 => Some(Gen::V2),
        (Op::E, Gen::Z21) if k == 2 => Some(Gen::Z1),
        (Op::E, Gen::Z12) if k == 1 => Some(Gen::Z2),
        (Op::F, Gen::V1) if k == 1 => Some(Gen::Z1),
        (Op::F, Gen::V2) if k == 2 => Some(Gen::Z2),
        (Op::F, Gen::Z1) if k == 2 => Some(Gen::Z21),
        (Op::F, Gen::Z2) if k == 1 => Some(Gen::Z12),
        _ => None,
    }
}

fn wt_k(word: &[Gen], k: u8) -> i64 {
    word.iter().map(|g| g.weight()[k as usize - 1]).sum()
}

/// `X_k` extended by the twisted Leibniz rule
/// `X(xy) = X(x) K_{a_k/2}(y) + K_{-a_k/2}(x) X(y)`, where `K_{a_k/2}`
/// acts on a homogeneous element of weight `mu` by `v^{mu_k}`.
pub fn act_gen(k: u8, op: Op, x: &GKElement) -> Result<GKElement, GkError> {
    if k != 1 && k != 2 {
        return Err(GkError::BadIndex(k));
    }
    let mut out = GKElement::zero();
    for (m, c) in x.terms() {
        let word = m.word();
        for p in 0..word.len() {
            let Some(img) = act_on_gen(k, op, word[p]) else { continue };
            let shift = -wt_k(&word[..p], k) + wt_k(&word[p + 1..], k);
            let mut w2 = word.clone();
            w2[p] = img;
            out.add_scaled(&normal_form(&w2, Strategy::Leftmost, DEFAULT_FUEL)?, &c.shift(shift as i32));
        }
    }
    Ok(out)
}

/// `X_k^{(r)} = X_k^r / (r)_q!`.
pub fn act_divided(k: u8, op: Op, r: u32, x: &GKElement) -> Result<GKElement, GkError> {
    let mut y = x.clone();
    for _ in 0..r {
        y = act_gen(k, op, &y)?;
    }
    let fact = RatFunc::from(q_factorial(r as i64).subs_pow(2));
    Ok(y.scale(&fact.inv().expect("nonzero factorial")))
}

/// Exponent of `v` in the normalization of `b_m`:
/// `m1(m21-m01) + m2(m12-m02) - (m12+m21)(m01+m02)`.
pub fn b_prefactor_exponent(m: &Pattern) -> i64 {
    m.m1 * (m.m21 - m.m01) + m.m2 * (m.m12 - m.m02) - (m.m12 + m.m21) * (m.m01 + m.m02)
}

/// `b_m = q^{e/2} z1^{m1} z2^{m2} z12^{m12} z21^{m21} v1^{m01} v2^{m02}`; zero
/// for patterns outside the basis set.
pub fn b_monomial(m: &Pattern) -> GKElement {
    if !m.is_basis() {
        return GKElement::zero();
    }
    let e = m.to_array().map(|x| x as u32);
    GKElement::monomial(Monomial(e), RatFunc::v_pow(b_prefactor_exponent(m) as i32))
}

/// Coordinates in the basis `b_m`; every normal monomial is a scalar multiple of one.
pub fn to_b_coords(x: &GKElement) -> BTreeMap<Pattern, RatFunc> {
    x.terms()
        .map(|(m, c)| {
            let p = m.to_pattern();
            (p, c.shift(-b_prefactor_exponent(&p) as i32))
        })
        .collect()
}

/// `K_{a_k}` acting on a homogeneous element of weight `mu` by `q^{mu_k}`.
pub fn k_alpha(k: u8, x: &GKElement) -> GKElement {
    let mut out = GKElement::zero();
    for (m, c) in x.terms() {
        out.add_term(*m, &c.shift(2 * m.weight()[k as usize - 1] as i32));
    }
    out
}

/// `[n]_q` as an element of Q(v).
pub(crate) fn q_number(n: i64) -> RatFunc {
    RatFunc::from(qarith::q_int(n).subs_pow(2))
}
