//! `sigma^i` through `sl2`-strings: on the string `F_i^{(k)} u`,
//! `0 <= k <= l`, through a vector `u` with `E_i u = 0` of `wt_i = l`,
//! the involution sends `F_i^{(k)} u` to `F_i^{(l-k)} u`.

use std::collections::BTreeMap;

use crystal::Pattern;
use qarith::RatFunc;

use crate::{check_index, Gen, ModuleError, ModuleVLambda, ModuleVector};

/// Forward elimination over Q(v) that remembers how each pivot row was built.
#[derive(Default)]
struct Echelon {
    pivots: Vec<(Pattern, ModuleVector, BTreeMap<usize, RatFunc>)>,
}

fn add_combo(acc: &mut BTreeMap<usize, RatFunc>, other: &BTreeMap<usize, RatFunc>, f: &RatFunc) {
    for (k, x) in other {
        let e = acc.entry(*k).or_default();
        *e += &(x * f);
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

impl Echelon {
    /// Reduce `v` against the pivots; returns the residual and the combination
    /// of labels subtracted.
    fn reduce(&self, v: &ModuleVector) -> (ModuleVector, BTreeMap<usize, RatFunc>) {
        let mut v = v.clone();
        let mut used = BTreeMap::new();
        for (p, row, combo) in &self.pivots {
            let f = v.coeff(p);
            if !f.is_zero() {
                v.add_scaled(row, &-&f);
                add_combo(&mut used, combo, &f);
            }
        }
        (v, used)
    }

    /// Insert vector number `label`; returns the combination of labels that
    /// vanishes if it is dependent on the earlier ones.
    fn insert(&mut self, label: usize, v: &ModuleVector) -> Option<BTreeMap<usize, RatFunc>> {
        let (rest, used) = self.reduce(v);
        let mut combo: BTreeMap<usize, RatFunc> = BTreeMap::from([(label, RatFunc::one())]);
        add_combo(&mut combo, &used, &RatFunc::from_int(-1));
        let Some((p, lead)) = rest.iter().next().map(|(p, x)| (*p, x.clone())) else {
            return Some(combo);
        };
        let inv = lead.inv().expect("nonzero pivot");
        let combo = combo.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        self.pivots.push((p, rest.scale(&inv), combo));
        None
    }

    /// Coordinates of `v` in the inserted vectors, if it lies in their span.
    fn express(&self, v: &ModuleVector) -> Option<BTreeMap<usize, RatFunc>> {
        let (rest, used) = self.reduce(v);
        rest.is_zero().then_some(used)
    }
}

impl ModuleVLambda {
    /// Basis patterns of weight `w`.
    pub fn weight_space(&self, w: [i64; 2]) -> Vec<Pattern> {
        self.basis().iter().filter(|m| m.weight() == w).copied().collect()
    }

    /// A basis of `ker E_i` on the weight space `w`.
    pub fn highest_vectors(&self, i: u8, w: [i64; 2]) -> Result<Vec<ModuleVector>, ModuleError> {
        check_index(i)?;
        let space = self.weight_space(w);
        let mut ech = Echelon::default();
        let mut out = Vec::new();
        for (k, p) in space.iter().enumerate() {
            let img = self.act_divided(Gen::E, i, 1, &ModuleVector::basis(*p))?;
            if let Some(combo) = ech.insert(k, &img) {
                out.push(ModuleVector::from_terms(combo.into_iter().map(|(k, x)| (space[k], x))));
            }
        }
        Ok(out)
    }

    /// `sigma^i` computed from the string decomposition of each weight space.
    pub fn sigma_string(&self, i: u8, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        check_index(i)?;
        let alpha = self.cartan().simple_root(i as usize);
        let mut out = ModuleVector::zero();
        for (w, comp) in v.weight_components() {
            let g = w[i as usize - 1];
            let mut ech = Echelon::default();
            let mut flipped: Vec<ModuleVector> = Vec::new();
            for k in g.min(0).abs()..=self.max_string() {
                let top = [w[0] + k * alpha.0[0], w[1] + k * alpha.0[1]];
                let l = g + 2 * k;
                for u in self.highest_vectors(i, top)? {
                    let s = self.act_divided(Gen::F, i, k, &u)?;
                    ech.insert(flipped.len(), &s);
                    flipped.push(self.act_divided(Gen::F, i, l - k, &u)?);
                }
            }
            let coords = ech.express(&comp).ok_or(ModuleError::Singular)?;
            for (k, c) in coords {
                out.add_scaled(&flipped[k], &c);
            }
        }
        Ok(out)
    }
}

/// Rank of a family of module vectors.
pub fn vector_rank(vs: &[ModuleVector]) -> usize {
    let mut ech = Echelon::default();
    vs.iter().enumerate().filter(|(k, v)| ech.insert(*k, v).is_none()).count()
}
