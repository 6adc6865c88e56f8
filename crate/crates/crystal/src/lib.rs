//! Explicit crystal combinatorics for sl3 on 6-tuples
//! `m = (m1, m2, m12, m21, m01, m02)` with `m1, m2 >= 0` and `m1 m2 = 0`.
//!
//! Operators are total on this ambient set and may leave the subset where all
//! entries are nonnegative; the module layer treats such patterns as zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub mod props;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrystalError {
    #[error("pattern {0} violates m1, m2 >= 0 and m1*m2 = 0")]
    NotInAmbient(String),
    #[error("array {0:?} is not in the image of khat")]
    NotInImage(GtArray),
    #[error("index {0} is not 1 or 2")]
    BadIndex(u8),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// A point of the ambient pattern set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern {
    pub m1: i64,
    pub m2: i64,
    pub m12: i64,
    pub m21: i64,
    pub m01: i64,
    pub m02: i64,
}

/// `a_1^+ = (0,0,-1,1,-1,1)`; `a_2^+ = -a_1^+`.
pub const STRING_SHIFT_1: [i64; 6] = [0, 0, -1, 1, -1, 1];

fn pos(x: i64) -> i64 {
    x.max(0)
}

impl Pattern {
    /// Construct, checking membership in the ambient set.
    pub fn new(m1: i64, m2: i64, m12: i64, m21: i64, m01: i64, m02: i64) -> Result<Self, CrystalError> {
        let p = Pattern { m1, m2, m12, m21, m01, m02 };
        if m1 < 0 || m2 < 0 || m1 * m2 != 0 {
            return Err(CrystalError::NotInAmbient(p.to_string()));
        }
        Ok(p)
    }

    pub fn from_array(a: [i64; 6]) -> Result<Self, CrystalError> {
        Self::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn to_array(self) -> [i64; 6] {
        [self.m1, self.m2, self.m12, self.m21, self.m01, self.m02]
    }

    /// All entries nonnegative.
    pub fn is_basis(&self) -> bool {
        self.to_array().iter().all(|&x| x >= 0)
    }

    pub fn l1(&self) -> i64 {
        self.m01 + self.m1 + self.m21
    }

    pub fn l2(&self) -> i64 {
        self.m02 + self.m2 + self.m12
    }

    /// `(m_i, m_j, m_ij, m_0i)` for `j = 3 - i`.
    pub fn local(&self, i: u8) -> (i64, i64, i64, i64) {
        if i == 1 {
            (self.m1, self.m2, self.m12, self.m01)
        } else {
            (self.m2, self.m1, self.m21, self.m02)
        }
    }

    fn with_local(&self, i: u8, mi: i64, mj: i64, mij: i64, m0i: i64) -> Pattern {
        let mut p = *self;
        if i == 1 {
            p.m1 = mi;
            p.m2 = mj;
            p.m12 = mij;
            p.m01 = m0i;
        } else {
            p.m2 = mi;
            p.m1 = mj;
            p.m21 = mij;
            p.m02 = m0i;
        }
        p
    }

    /// `wt_i(m) = m_0i - m_i + m_j - m_ij`.
    pub fn wt(&self, i: u8) -> i64 {
        let (mi, mj, mij, m0i) = self.local(i);
        m0i - mi + mj - mij
    }

    /// The weight `(wt_1, wt_2)` in fundamental coordinates.
    pub fn weight(&self) -> [i64; 2] {
        [self.wt(1), self.wt(2)]
    }

    /// `e_i^r`; negative `r` gives the inverse direction.
    pub fn e_pow(&self, i: u8, r: i64) -> Pattern {
        let (mi, mj, mij, m0i) = self.local(i);
        let t = (mi - r).min(mj);
        self.with_local(i, pos(mi - mj - r), pos(mj - mi + r), mij + t, m0i + r + t)
    }

    /// The outer involution `(m1,m2,m12,m21,m01,m02) -> (m1,m2,m02,m01,m21,m12)`.
    pub fn sigma_outer(&self) -> Pattern {
        Pattern { m1: self.m1, m2: self.m2, m12: self.m02, m21: self.m01, m01: self.m21, m02: self.m12 }
    }

    /// `sigma^i(m) = e_i^{-wt_i(m)}(m)`.
    pub fn sigma_i(&self, i: u8) -> Pattern {
        self.e_pow(i, -self.wt(i))
    }

    /// `m + t a_i^+` (may leave the ambient set; returns `None` then).
    pub fn shift(&self, i: u8, t: i64) -> Option<Pattern> {
        let sign = if i == 1 { 1 } else { -1 };
        let a = self.to_array();
        let mut out = [0; 6];
        for k in 0..6 {
            out[k] = a[k] + sign * t * STRING_SHIFT_1[k];
        }
        Pattern::from_array(out).ok()
    }

    pub fn khat(&self) -> GtArray {
        GtArray {
            a1: self.m1 + self.m21,
            a2: self.m2 + self.m12 + self.m21,
            a3: self.m12,
            l1: self.l1(),
            l2: self.l2(),
        }
    }

    /// Apply an operator by name: `sigma`, `sigma1`, `sigma2`, `e1^r`, `e2^r`
    /// (`e1` alone means `r = 1`).
    pub fn apply_op(&self, op: &str) -> Result<Pattern, CrystalError> {
        let op = op.trim();
        let bad = || CrystalError::Parse(op.to_string());
        match op {
            "sigma" => return Ok(self.sigma_outer()),
            "sigma1" => return Ok(self.sigma_i(1)),
            "sigma2" => return Ok(self.sigma_i(2)),
            _ => {}
        }
        let rest = op.strip_prefix('e').ok_or_else(bad)?;
        let (idx, r) = match rest.split_once('^') {
            Some((i, r)) => {
                (i, r.trim().trim_start_matches('{').trim_end_matches('}').parse::<i64>().map_err(|_| bad())?)
            }
            None => (rest, 1),
        };
        let i: u8 = idx.parse().map_err(|_| bad())?;
        if i != 1 && i != 2 {
            return Err(CrystalError::BadIndex(i));
        }
        Ok(self.e_pow(i, r))
    }

    /// Apply a comma-separated operator list right-to-left, as in composition.
    pub fn apply_ops(&self, ops: &str) -> Result<Pattern, CrystalError> {
        let mut p = *self;
        for op in ops.split(',').filter(|s| !s.trim().is_empty()).collect::<Vec<_>>().into_iter().rev() {
            p = p.apply_op(op)?;
        }
        Ok(p)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},{},{}", self.m1, self.m2, self.m12, self.m21, self.m01, self.m02)
    }
}

impl FromStr for Pattern {
    type Err = CrystalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<i64> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| CrystalError::Parse(s.to_string())))
            .collect::<Result<_, _>>()?;
        let arr: [i64; 6] = parts.try_into().map_err(|_| CrystalError::Parse(s.to_string()))?;
        Pattern::from_array(arr)
    }
}

/// The image of a pattern under `khat`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GtArray {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub l1: i64,
    pub l2: i64,
}

impl GtArray {
    /// Inverse of [`Pattern::khat`]; fails off the image.
    pub fn khat_inv(&self) -> Result<Pattern, CrystalError> {
        let GtArray { a1, a2, a3, l1, l2 } = *self;
        let t = a1.min(a2 - a3);
        let p =
            Pattern { m1: pos(a1 + a3 - a2), m2: pos(a2 - a1 - a3), m12: a3, m21: t, m01: l1 - a1, m02: l2 - a2 + t };
        if p.khat() != *self {
            return Err(CrystalError::NotInImage(*self));
        }
        Ok(p)
    }
}

/// All basis patterns with the given `(l1, l2)`, in lexicographic order.
pub fn enumerate_component(l1: i64, l2: i64) -> Vec<Pattern> {
    let mut out = Vec::new();
    for m1 in 0..=l1 {
        for m21 in 0..=(l1 - m1) {
            let m01 = l1 - m1 - m21;
            for m2 in 0..=l2 {
                if m1 * m2 != 0 {
                    continue;
                }
                for m12 in 0..=(l2 - m2) {
                    out.push(Pattern { m1, m2, m12, m21, m01, m02: l2 - m2 - m12 });
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: [i64; 6]) -> Pattern {
        Pattern::from_array(a).unwrap()
    }

    #[test]
    fn weight_examples() {
        let m = p([0, 0, 0, 0, 3, 5]);
        assert_eq!(m.weight(), [3, 5]);
        assert_eq!(p([1, 0, 0, 0, 0, 0]).wt(1), -1);
    }

    #[test]
    fn operator_examples() {
        assert_eq!(p([1, 0, 0, 0, 0, 0]).e_pow(1, 1), p([0, 0, 0, 0, 1, 0]));
        assert_eq!(p([0, 0, 0, 0, 1, 0]).sigma_outer(), p([0, 0, 0, 1, 0, 0]));
        assert_eq!(p([1, 0, 0, 0, 0, 0]).sigma_outer(), p([1, 0, 0, 0, 0, 0]));
        assert_eq!(p([1, 0, 0, 0, 0, 0]).sigma_i(1), p([0, 0, 0, 0, 1, 0]));
        let m = p([2, 0, 1, 3, 0, 4]);
        assert_eq!(m.e_pow(1, 0), m);
    }

    #[test]
    fn khat_examples() {
        let g = p([0, 0, 0, 0, 4, 7]).khat();
        assert_eq!(g, GtArray { a1: 0, a2: 0, a3: 0, l1: 4, l2: 7 });
        let g = p([1, 0, 0, 0, 0, 0]).khat();
        assert_eq!(g, GtArray { a1: 1, a2: 0, a3: 0, l1: 1, l2: 0 });
        assert_eq!(g.khat_inv().unwrap(), p([1, 0, 0, 0, 0, 0]));
        let bad = GtArray { a1: 1, a2: 1, a3: 0, l1: 1, l2: 0 };
        assert_eq!(bad.khat_inv().unwrap().khat(), bad);
    }

    #[test]
    fn e2_on_arrays() {
        let m = p([0, 2, 1, 1, 3, 0]);
        let g = m.khat();
        let r = 2;
        assert_eq!(m.e_pow(2, r).khat(), GtArray { a2: g.a2 - r, ..g });
    }

    #[test]
    fn components() {
        let c = enumerate_component(1, 0);
        assert_eq!(c, vec![p([0, 0, 0, 0, 1, 0]), p([0, 0, 0, 1, 0, 0]), p([1, 0, 0, 0, 0, 0])]);
        assert_eq!(enumerate_component(1, 1).len(), 8);
        assert_eq!(enumerate_component(0, 0), vec![p([0; 6])]);
    }

    #[test]
    fn ops_parse_and_compose_right_to_left() {
        let m = p([1, 0, 0, 0, 0, 0]);
        assert_eq!(m.apply_ops("sigma,e1^1").unwrap(), m.e_pow(1, 1).sigma_outer());
        assert_eq!(m.apply_op("e2^-3").unwrap(), m.e_pow(2, -3));
        assert!(m.apply_op("e3").is_err());
        assert!(m.apply_op("foo").is_err());
        assert_eq!("1,0,0,0,0,0".parse::<Pattern>().unwrap(), m);
        assert!("1,1,0,0,0,0".parse::<Pattern>().is_err());
    }
}
