//! Lusztig's braid operators `T_i^{±}` and the cactus involutions `sigma_J`
//! built from them.

use cartan::Weight;
use coxeter::SubsetJ;
use num_integer::Integer;
use qarith::{BigRational, LaurentPoly, RatFunc};

use crate::{check_index, Gen, ModuleError, ModuleVLambda, ModuleVector};

/// Which of the two braid operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

fn sign_of(k: i64) -> RatFunc {
    RatFunc::from_int(if k.is_even() { 1 } else { -1 })
}

fn half_integer_to_v(e: &BigRational) -> Result<i32, ModuleError> {
    // q^e = v^{2e}
    let two_e = e * BigRational::from_integer(2.into());
    if !two_e.is_integer() {
        return Err(ModuleError::NonIntegral(e.to_string()));
    }
    two_e.to_integer().try_into().map_err(|_| ModuleError::NonIntegral(e.to_string()))
}

impl ModuleVLambda {
    /// `T_i^+ = sum (-1)^b q^{b-ac} K_{(a-c-1)alpha_i/2} F^{(a)} E^{(b)} F^{(c)} K_{(a-c)alpha_i/2}`,
    /// `T_i^- = sum (-1)^b q^{b-ac} K_{(c-a+1)alpha_i/2} E^{(a)} F^{(b)} E^{(c)} K_{(c-a)alpha_i/2}`,
    /// with `a, b, c` up to the largest string length.
    pub fn lusztig_t(&self, i: u8, sign: Sign, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        check_index(i)?;
        let n = self.max_string();
        let (outer, middle) = match sign {
            Sign::Plus => (Gen::F, Gen::E),
            Sign::Minus => (Gen::E, Gen::F),
        };
        let mut out = ModuleVector::zero();
        for c in 0..=n {
            for a in 0..=n {
                let pre = match sign {
                    Sign::Plus => a - c,
                    Sign::Minus => c - a,
                };
                let post = match sign {
                    Sign::Plus => a - c - 1,
                    Sign::Minus => c - a + 1,
                };
                let w = self.k_half_alpha(i, pre, v);
                let w = self.act_divided(outer, i, c, &w)?;
                if w.is_zero() {
                    continue;
                }
                for b in 0..=n {
                    let u = self.act_divided(middle, i, b, &w)?;
                    if u.is_zero() {
                        break;
                    }
                    let u = self.act_divided(outer, i, a, &u)?;
                    if u.is_zero() {
                        continue;
                    }
                    let u = self.k_half_alpha(i, post, &u);
                    let coeff = sign_of(b).shift((2 * (b - a * c)) as i32);
                    out.add_scaled(&u, &coeff);
                }
            }
        }
        Ok(out)
    }

    /// `T_w = T_{i_1} ... T_{i_k}` along a word (rightmost factor applied first).
    pub fn lusztig_t_word(&self, word: &[usize], sign: Sign, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let mut out = v.clone();
        for &i in word.iter().rev() {
            out = self.lusztig_t(i as u8, sign, &out)?;
        }
        Ok(out)
    }

    /// The Casimir element `Omega_i = F_i E_i + (q K_i + q^{-1} K_i^{-1}) / (q - q^{-1})^2`.
    pub fn casimir(&self, i: u8, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let fe = self.act_divided(Gen::F, i, 1, &self.act_divided(Gen::E, i, 1, v)?)?;
        let den = casimir_denominator();
        let k = v.map_linear(|m| {
            let w = m.wt(i) as i32;
            vec![(*m, LaurentPoly::from_int_terms(&[(2 + 2 * w, 1), (-2 - 2 * w, 1)]))]
        });
        Ok(fe.add(&k.scale(&den)))
    }

    /// Component of `v` in the `U_q(sl2)_i`-isotypic part of highest weight
    /// `l`, by Lagrange interpolation in the Casimir eigenvalues. `v` must be
    /// a weight vector with `wt_i = beta`.
    fn isotypic_part(&self, i: u8, l: i64, beta: i64, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let mut out = v.clone();
        let ls = (beta.abs()..=self.max_string()).step_by(2);
        for l2 in ls.filter(|&x| x != l) {
            let c2 = casimir_value(l2);
            let diff = (&casimir_value(l) - &c2).inv().map_err(|_| ModuleError::Singular)?;
            let shifted = self.casimir(i, &out)?;
            let mut next = shifted;
            next.add_scaled(&out, &-&c2);
            out = next.scale(&diff);
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    /// `sigma_J` for `J = {i}` or `J = {1, 2}`:
    /// `sigma_J = (-1)^{rho_J^vee(lambda_J -/+ beta)} q^{-((lambda_J,lambda_J)-(beta,beta))/2 - (lambda_J,rho_J)} T_{w_J}^{±}`
    /// on the part of weight `beta` in the `J`-isotypic component of highest weight `lambda_J`.
    pub fn sigma_j(&self, j: &SubsetJ, sign: Sign, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let elems: Vec<usize> = j.iter().collect();
        match elems.as_slice() {
            [i] if *i == 1 || *i == 2 => self.sigma_simple(*i as u8, sign, v),
            [1, 2] => self.sigma_full(sign, v),
            _ => Err(ModuleError::BadSubset(j.to_string())),
        }
    }

    fn prefactor(&self, j: &SubsetJ, sign: Sign, lambda_j: &Weight, beta: &Weight) -> Result<RatFunc, ModuleError> {
        let cd = self.cartan();
        let arg = match sign {
            Sign::Plus => lambda_j - beta,
            Sign::Minus => lambda_j + beta,
        };
        let (_, rho_vee) = cd.rho_functionals(j, &arg)?;
        if !rho_vee.is_integer() {
            return Err(ModuleError::NonIntegral(rho_vee.to_string()));
        }
        let (lam_rho, _) = cd.rho_functionals(j, lambda_j)?;
        let half = BigRational::new(1.into(), 2.into());
        let e = -(cd.form(lambda_j, lambda_j) - cd.form(beta, beta)) * half - lam_rho;
        Ok(sign_of(rho_vee.to_integer().try_into().expect("small")).shift(half_integer_to_v(&e)?))
    }

    fn sigma_simple(&self, i: u8, sign: Sign, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let j = SubsetJ::new([i as usize]);
        let alpha = self.cartan().simple_root(i as usize);
        let mut out = ModuleVector::zero();
        for (w, comp) in v.weight_components() {
            let beta = Weight(w.to_vec());
            let b = w[i as usize - 1];
            for l in (b.abs()..=self.max_string()).step_by(2) {
                let part = self.isotypic_part(i, l, b, &comp)?;
                if part.is_zero() {
                    continue;
                }
                // the top of the string through beta
                let lambda_j = &beta + &alpha.scaled((l - b) / 2);
                let pre = self.prefactor(&j, sign, &lambda_j, &beta)?;
                out.add_scaled(&self.lusztig_t(i, sign, &part)?, &pre);
            }
        }
        Ok(out)
    }

    fn sigma_full(&self, sign: Sign, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let j = SubsetJ::new([1, 2]);
        let lambda = self.lambda();
        let w0 = self.cartan().weyl().longest_element(&j)?;
        let word = self.cartan().weyl().reduced_word(&w0);
        let mut out = ModuleVector::zero();
        for (w, comp) in v.weight_components() {
            let pre = self.prefactor(&j, sign, &lambda, &Weight(w.to_vec()))?;
            out.add_scaled(&self.lusztig_t_word(&word, sign, &comp)?, &pre);
        }
        Ok(out)
    }
}

fn casimir_denominator() -> RatFunc {
    // 1 / (q - q^{-1})^2
    let d = LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]);
    RatFunc::from(&d * &d).inv().expect("nonzero")
}

/// Eigenvalue of the Casimir on the simple module of highest weight `l`:
/// `(q^{l+1} + q^{-l-1}) / (q - q^{-1})^2`.
pub fn casimir_value(l: i64) -> RatFunc {
    let l = l as i32;
    let num = LaurentPoly::from_int_terms(&[(2 * l + 2, 1), (-2 * l - 2, 1)]);
    &RatFunc::from(num) * &casimir_denominator()
}
