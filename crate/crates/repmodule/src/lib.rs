//! The irreducible sl3 module `V_{l1,l2}` over Q(v) on the basis `b_m`,
//! `m` a pattern of the component, with the divided-power action of the
//! quantum group, the Gelfand-Tsetlin change of basis `C^i`, the matrices
//! `N^i = C^i P^i (C^i)^{-1}`, Lusztig's braid operators and the cactus
//! involutions `sigma_J`.

use std::collections::HashMap;

use cartan::{CartanDatum, Weight};
use crystal::{enumerate_component, Pattern};
use qarith::{cg_coeff_q, q_binomial_in_q, LaurentPoly};

mod export;
mod extremal;
mod gt;
mod lusztig;
mod matrix;
pub mod props;
mod strings;
mod vector;

pub use export::{export_matrices, MatrixName};
pub use matrix::SparseMatrix;
pub use vector::ModuleVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("highest weight ({0}, {1}) is not dominant")]
    NotDominant(i64, i64),
    #[error("generator index {0} is not 1 or 2")]
    BadIndex(u8),
    #[error("pattern {0} is not in the basis")]
    NotInBasis(Pattern),
    #[error("matrix is singular")]
    Singular,
    #[error("subset {0} is not supported (use {{i}} or {{1,2}})")]
    BadSubset(String),
    #[error("non-integral power of v: {0}")]
    NonIntegral(String),
    #[error(transparent)]
    Cartan(#[from] cartan::CartanError),
    #[error(transparent)]
    Coxeter(#[from] coxeter::CoxeterError),
    #[error("unknown matrix name {0}")]
    UnknownMatrix(String),
}

/// Raising or lowering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E,
    F,
}

/// `V_{l1,l2}` with its pattern basis in lexicographic order.
#[derive(Clone, Debug)]
pub struct ModuleVLambda {
    l1: i64,
    l2: i64,
    basis: Vec<Pattern>,
    index: HashMap<Pattern, usize>,
    cartan: CartanDatum,
}

fn check_index(i: u8) -> Result<(), ModuleError> {
    if i == 1 || i == 2 {
        Ok(())
    } else {
        Err(ModuleError::BadIndex(i))
    }
}

impl ModuleVLambda {
    pub fn new(l1: i64, l2: i64) -> Result<Self, ModuleError> {
        if l1 < 0 || l2 < 0 {
            return Err(ModuleError::NotDominant(l1, l2));
        }
        let basis = enumerate_component(l1, l2);
        let index = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        Ok(ModuleVLambda { l1, l2, basis, index, cartan: CartanDatum::sl3() })
    }

    pub fn l1(&self) -> i64 {
        self.l1
    }

    pub fn l2(&self) -> i64 {
        self.l2
    }

    pub fn lambda(&self) -> Weight {
        Weight(vec![self.l1, self.l2])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Pattern] {
        &self.basis
    }

    pub fn index_of(&self, m: &Pattern) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Pattern) -> bool {
        self.index.contains_key(m)
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    /// Largest string length; divided powers beyond it act by zero.
    pub fn max_string(&self) -> i64 {
        self.l1 + self.l2
    }

    /// The pattern of weight `lambda`.
    pub fn highest_pattern(&self) -> Pattern {
        Pattern { m1: 0, m2: 0, m12: 0, m21: 0, m01: self.l1, m02: self.l2 }
    }

    pub fn highest_vector(&self) -> ModuleVector {
        ModuleVector::basis(self.highest_pattern())
    }

    fn keep(&self, out: &mut Vec<(Pattern, LaurentPoly)>, m: Pattern, c: LaurentPoly) {
        if !c.is_zero() && self.contains(&m) {
            out.push((m, c));
        }
    }

    /// `E_i^{(r)} b_m` on a basis vector.
    pub fn e_image(&self, i: u8, r: i64, m: &Pattern) -> Vec<(Pattern, LaurentPoly)> {
        let mut out = Vec::new();
        if r < 0 {
            return out;
        }
        let (mi, mj, mij, _) = m.local(i);
        let base = m.e_pow(i, r);
        self.keep(&mut out, base, q_binomial_in_q(mi + mij, r));
        for t in 1..=r {
            if let Some(p) = base.shift(i, t) {
                self.keep(&mut out, p, cg_coeff_q(r, t, mj + mij, mi + mij));
            }
        }
        out
    }

    /// `F_i^{(r)} b_m` on a basis vector. The correction terms sit at
    /// `e_i^{-r}(m) + t a_i^+`, the same side as for `E`.
    pub fn f_image(&self, i: u8, r: i64, m: &Pattern) -> Vec<(Pattern, LaurentPoly)> {
        let mut out = Vec::new();
        if r < 0 {
            return out;
        }
        let (mi, mj, _, m0i) = m.local(i);
        let base = m.e_pow(i, -r);
        self.keep(&mut out, base, q_binomial_in_q(mj + m0i, r));
        for t in 1..=r {
            if let Some(p) = base.shift(i, t) {
                self.keep(&mut out, p, cg_coeff_q(r, t, mi + m0i, mj + m0i));
            }
        }
        out
    }

    /// `X_i^{(r)} v` for `X` in `{E, F}`.
    pub fn act_divided(&self, g: Gen, i: u8, r: i64, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        check_index(i)?;
        Ok(match g {
            Gen::E => v.map_linear(|m| self.e_image(i, r, m)),
            Gen::F => v.map_linear(|m| self.f_image(i, r, m)),
        })
    }

    /// `K_{(h/2) alpha_i}`, acting on weight `beta` by `v^{h wt_i(beta)}`.
    pub fn k_half_alpha(&self, i: u8, h: i64, v: &ModuleVector) -> ModuleVector {
        v.shift_by(|m| (h * m.wt(i)) as i32)
    }

    /// `K_mu` for an integral weight `mu`, acting on weight `beta` by `q^{(mu, beta)}`.
    pub fn k_weight(&self, mu: &Weight, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let mut out = ModuleVector::zero();
        for (w, comp) in v.weight_components() {
            let e = self.cartan.form(mu, &Weight(w.to_vec())) * qarith::BigRational::from_integer(2.into());
            if !e.is_integer() {
                return Err(ModuleError::NonIntegral(e.to_string()));
            }
            let k: i32 = e.to_integer().try_into().map_err(|_| ModuleError::NonIntegral(e.to_string()))?;
            out = out.add(&comp.shift(k));
        }
        Ok(out)
    }

    /// Apply an operator given as a closure on basis patterns to every basis vector,
    /// giving the matrix in the basis order.
    pub fn matrix_of<F>(&self, f: F) -> SparseMatrix
    where
        F: Fn(&Pattern) -> ModuleVector,
    {
        let cols = self
            .basis
            .iter()
            .map(|m| {
                f(m).iter().map(|(p, c)| (self.index_of(p).expect("image stays in the module"), c.clone())).collect()
            })
            .collect();
        SparseMatrix::from_columns(self.dim(), cols)
    }

    /// The vector with coordinates given by column `j` of a matrix.
    pub fn column_vector(&self, a: &SparseMatrix, j: usize) -> ModuleVector {
        ModuleVector::from_terms(a.column(j).iter().map(|(r, x)| (self.basis[*r], x.clone())))
    }
}

pub use gt::{conjecture_order_three, involution_check};
pub use lusztig::{casimir_value, Sign};
