//! Gelfand-Tsetlin bases, the change-of-basis matrices `C^i`, the
//! permutation matrices `P^i` and `N^i = C^i P^i (C^i)^{-1}`.

use crystal::Pattern;
use qarith::{cg_coeff_q, q_binomial_in_q, RatFunc};
use serde_json::{json, Value};

use crate::{check_index, Gen, ModuleError, ModuleVLambda, ModuleVector, SparseMatrix};

impl ModuleVLambda {
    /// `b^{(i)}_m = E_i^{(r)} b_{e_i^{-r}(m)}` with `r = m_j + m_0i`.
    pub fn gt_vector(&self, i: u8, m: &Pattern) -> Result<ModuleVector, ModuleError> {
        check_index(i)?;
        if !self.contains(m) {
            return Err(ModuleError::NotInBasis(*m));
        }
        let (_, mj, _, m0i) = m.local(i);
        let r = mj + m0i;
        let src = m.e_pow(i, -r);
        if !self.contains(&src) {
            return Ok(ModuleVector::zero());
        }
        self.act_divided(Gen::E, i, r, &ModuleVector::basis(src))
    }

    /// `C^i` by its closed form: column `m` holds the coordinates of `b^{(i)}_m`.
    pub fn matrix_c(&self, i: u8) -> Result<SparseMatrix, ModuleError> {
        check_index(i)?;
        Ok(self.matrix_of(|m| {
            let (mi, mj, mij, m0i) = m.local(i);
            let mut col = ModuleVector::basis(*m).scale(&q_binomial_in_q(mi + m0i + mj + mij, mi + mij).into());
            let r = mj + m0i;
            for t in 1..=r {
                if let Some(p) = m.shift(i, t).filter(|p| self.contains(p)) {
                    col.add_term(p, &cg_coeff_q(r, t, mj + mij, mi + m0i + mj + mij).into());
                }
            }
            col
        }))
    }

    /// `P^i` with `P_{sigma^i(m), m} = 1`.
    pub fn matrix_p(&self, i: u8) -> Result<SparseMatrix, ModuleError> {
        check_index(i)?;
        Ok(self.matrix_of(|m| ModuleVector::basis(m.sigma_i(i))))
    }

    /// `N^i = C^i P^i (C^i)^{-1}`.
    pub fn matrix_n(&self, i: u8) -> Result<SparseMatrix, ModuleError> {
        let c = self.matrix_c(i)?;
        let p = self.matrix_p(i)?;
        Ok(c.mul(&p).mul(&c.inverse()?))
    }
}

fn defect_witness(m: &ModuleVLambda, name: &str, a: &SparseMatrix) -> Result<(), Value> {
    match a.identity_defect() {
        None => Ok(()),
        Some((r, c, x)) => Err(json!({
            "lambda": [m.l1(), m.l2()],
            "product": name,
            "row": m.basis()[r].to_string(),
            "col": m.basis()[c].to_string(),
            "entry": x,
        })),
    }
}

/// `(N^1 N^2)^3 = 1` on `V_{l1,l2}`.
pub fn conjecture_order_three(m: &ModuleVLambda) -> Result<(), Value> {
    let err = |e: ModuleError| json!({"lambda": [m.l1(), m.l2()], "error": e.to_string()});
    let n1 = m.matrix_n(1).map_err(err)?;
    let n2 = m.matrix_n(2).map_err(err)?;
    defect_witness(m, "(N1 N2)^3", &n1.mul(&n2).pow(3))
}

/// `(N^i)^2 = 1` for both `i`.
pub fn involution_check(m: &ModuleVLambda) -> Result<(), Value> {
    let err = |e: ModuleError| json!({"lambda": [m.l1(), m.l2()], "error": e.to_string()});
    for i in [1u8, 2] {
        let n = m.matrix_n(i).map_err(err)?;
        defect_witness(m, if i == 1 { "N1^2" } else { "N2^2" }, &n.pow(2))?;
    }
    Ok(())
}

/// Coordinates of `C^i` agree with the Gelfand-Tsetlin vectors computed
/// through the `E` action.
pub fn c_matches_gt_vectors(m: &ModuleVLambda) -> Result<(), Value> {
    for i in [1u8, 2] {
        let c = m.matrix_c(i).map_err(|e| json!(e.to_string()))?;
        for (j, p) in m.basis().iter().enumerate() {
            let gt = m.gt_vector(i, p).map_err(|e| json!(e.to_string()))?;
            if m.column_vector(&c, j) != gt {
                return Err(json!({"lambda": [m.l1(), m.l2()], "i": i, "pattern": p.to_string()}));
            }
        }
    }
    Ok(())
}

/// `C^i` preserves weights and is triangular within each weight block
/// (nonzero off-diagonal entries only at `m + t a_i^+`, `t > 0`).
pub fn c_block_structure(m: &ModuleVLambda) -> Result<(), Value> {
    for i in [1u8, 2] {
        let c = m.matrix_c(i).map_err(|e| json!(e.to_string()))?;
        for (j, p) in m.basis().iter().enumerate() {
            for (r, x) in c.column(j) {
                let q = m.basis()[*r];
                let ok =
                    q.weight() == p.weight() && (q == *p || (1..=m.max_string()).any(|t| p.shift(i, t) == Some(q)));
                if !ok || (q == *p && x.is_zero()) {
                    return Err(json!({"i": i, "col": p.to_string(), "row": q.to_string()}));
                }
            }
            if c.get(j, j) == RatFunc::zero() {
                return Err(json!({"i": i, "zero diagonal": p.to_string()}));
            }
        }
    }
    Ok(())
}
