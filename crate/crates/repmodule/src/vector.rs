//! Sparse vectors over Q(v) indexed by basis patterns.

use std::collections::BTreeMap;
use std::fmt;

use crystal::Pattern;
use qarith::{LaurentPoly, RatFunc};
use serde::{Serialize, Serializer};

/// A finite combination `sum c_m b_m` with no zero coefficients stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ModuleVector(BTreeMap<Pattern, RatFunc>);

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector(BTreeMap::new())
    }

    pub fn basis(m: Pattern) -> Self {
        let mut v = Self::zero();
        v.0.insert(m, RatFunc::one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (Pattern, RatFunc)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (m, c) in terms {
            v.add_term(m, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, m: &Pattern) -> RatFunc {
        self.0.get(m).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Pattern, &RatFunc)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, m: Pattern, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.0.remove(&m);
                }
            }
            None => {
                self.0.insert(m, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &ModuleVector, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.0 {
            self.add_term(*m, &(x * c));
        }
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::one());
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::from_int(-1));
        out
    }

    pub fn scale(&self, c: &RatFunc) -> ModuleVector {
        if c.is_zero() {
            return Self::zero();
        }
        ModuleVector(self.0.iter().map(|(m, x)| (*m, x * c)).collect())
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> ModuleVector {
        ModuleVector(self.0.iter().map(|(m, x)| (*m, x.shift(k))).collect())
    }

    /// Multiply the coefficient of `b_m` by `v^{f(m)}`.
    pub fn shift_by(&self, f: impl Fn(&Pattern) -> i32) -> ModuleVector {
        ModuleVector(self.0.iter().map(|(m, x)| (*m, x.shift(f(m)))).collect())
    }

    /// Apply a linear map given on basis vectors by Laurent coefficients.
    pub fn map_linear<F>(&self, f: F) -> ModuleVector
    where
        F: Fn(&Pattern) -> Vec<(Pattern, LaurentPoly)>,
    {
        let mut out = Self::zero();
        for (m, c) in &self.0 {
            for (m2, k) in f(m) {
                out.add_term(m2, &(c * &RatFunc::from(k)));
            }
        }
        out
    }

    /// Split into weight components, keyed by `(wt_1, wt_2)`.
    pub fn weight_components(&self) -> BTreeMap<[i64; 2], ModuleVector> {
        let mut out: BTreeMap<[i64; 2], ModuleVector> = BTreeMap::new();
        for (m, c) in &self.0 {
            out.entry(m.weight()).or_default().0.insert(*m, c.clone());
        }
        out
    }

    /// The unique weight if the vector is nonzero and homogeneous.
    pub fn homogeneous_weight(&self) -> Option<[i64; 2]> {
        let mut it = self.0.keys().map(|m| m.weight());
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(m, c)| format!("({c}) b[{m}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for ModuleVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(String, &RatFunc)> = self.0.iter().map(|(m, c)| (m.to_string(), c)).collect();
        terms.serialize(s)
    }
}
