//! Extremal vectors `[v]_w = F_{i_1}^{(a_1)} ... F_{i_m}^{(a_m)} v_lambda`.

use coxeter::GroupElement;

use crate::{Gen, ModuleError, ModuleVLambda, ModuleVector};

impl ModuleVLambda {
    /// `F_{i,lambda} v_lambda` along a reduced word.
    pub fn extremal_vector_word(&self, word: &[usize]) -> Result<ModuleVector, ModuleError> {
        let exps = self.cartan().extremal_exponents(word, &self.lambda())?;
        let mut v = self.highest_vector();
        for (&i, &a) in word.iter().zip(&exps).rev() {
            v = self.act_divided(Gen::F, i as u8, a, &v)?;
        }
        Ok(v)
    }

    /// `[v]_w` for the deterministic reduced word of `w`.
    pub fn extremal_vector(&self, w: &GroupElement) -> Result<ModuleVector, ModuleError> {
        let word = self.cartan().weyl().reduced_word(w);
        self.extremal_vector_word(&word)
    }
}
