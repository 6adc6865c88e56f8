//! Serialization: a Laurent polynomial is an array of `[k, "p/q"]` pairs by
//! ascending `k`; a rational function is `{"num": [...], "den": [...]}`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::ratfunc::RatFunc;
use crate::QarithError;

/// Render a rational as a reduced `p/q` string.
pub fn fraction_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parse `p/q` or a bare integer `p`.
pub fn parse_fraction(s: &str) -> Result<BigRational, QarithError> {
    let bad = || QarithError::Parse(format!("bad fraction {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (k, c) in terms {
            seq.serialize_element(&(k, fraction_string(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i32, String)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (i, (k, c)) in pairs.iter().enumerate() {
            if i > 0 && pairs[i - 1].0 >= *k {
                return Err(de::Error::custom("exponents must be strictly ascending"));
            }
            terms.push((*k, parse_fraction(c).map_err(de::Error::custom)?));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr { num: self.numer().clone(), den: self.denom().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        RatFunc::new(r.num, r.den).map_err(de::Error::custom)
    }
}
