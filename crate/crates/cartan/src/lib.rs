//! Cartan data of finite type: weights in fundamental coordinates, the Weyl
//! group action, the invariant form, rho-type functionals and the exponents of
//! extremal monomials.
//!
//! Convention: `a_ij = a_j(a_i^vee)`, so the simple root `a_j` has fundamental
//! coordinates given by column `j` of the Cartan matrix.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use coxeter::{CoxeterDatum, CoxeterError, GroupElement, SubsetJ};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight has {got} coordinates, expected {expected}")]
    Rank { expected: usize, got: usize },
    #[error("cannot parse weight {0:?}")]
    Parse(String),
}

/// A weight `sum_i c_i w_i` in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// Fundamental weight `w_i` (1-based).
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = vec![0; n];
        w[i - 1] = 1;
        Weight(w)
    }

    /// `lambda(a_i^vee)`, 1-based.
    pub fn coord(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Parse `"l1,l2"`.
    pub fn parse(s: &str) -> Result<Self, CartanError> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| CartanError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Inverse of an integer matrix over Q by Gauss-Jordan elimination.
fn inverse(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| rat(x)).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix of finite type is invertible");
        m.swap(col, p);
        let piv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &piv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Minimal positive symmetrizer `d` with `d_i a_ij = d_j a_ji`, per connected component.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::one());
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && a[i][j] != 0 && d[j].is_none() {
                    d[j] = Some(d[i].clone().unwrap() * rat(a[i][j]) / rat(a[j][i]));
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comps.push(comp);
    }
    let d: Vec<BigRational> = d.into_iter().map(Option::unwrap).collect();
    let mut out = vec![0i64; n];
    for comp in comps {
        let lcm = comp.iter().fold(num_bigint::BigInt::one(), |acc, &i| acc.lcm(d[i].denom()));
        let ints: Vec<num_bigint::BigInt> = comp.iter().map(|&i| d[i].numer() * (&lcm / d[i].denom())).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, x) in comp.iter().zip(ints) {
            out[i] = i64::try_from(x / &g).expect("small symmetrizer");
        }
    }
    out
}

/// Cartan datum with its Weyl group.
#[derive(Clone, Debug)]
pub struct CartanDatum {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    a_inv: Vec<Vec<BigRational>>,
    weyl: CoxeterDatum,
}

impl CartanDatum {
    pub fn from_matrix(name: &str, a: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let weyl = CoxeterDatum::from_cartan(name, a.clone())?;
        let d = symmetrizer(&a);
        let a_inv = inverse(&a);
        Ok(CartanDatum { a, d, a_inv, weyl })
    }

    pub fn from_type(s: &str) -> Result<Self, CartanError> {
        Self::from_matrix(s, coxeter::parse_cartan_type(s)?)
    }

    /// Type `A_2`, the case used by the sl3 modules.
    pub fn sl3() -> Self {
        Self::from_type("A2").expect("A2 is a valid type")
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn inverse_matrix(&self) -> &[Vec<BigRational>] {
        &self.a_inv
    }

    pub fn weyl(&self) -> &CoxeterDatum {
        &self.weyl
    }

    fn check(&self, w: &Weight) -> Result<(), CartanError> {
        if w.0.len() != self.rank() {
            return Err(CartanError::Rank { expected: self.rank(), got: w.0.len() });
        }
        Ok(())
    }

    /// Simple root `a_i` in fundamental coordinates (1-based).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.a.iter().map(|row| row[i - 1]).collect())
    }

    /// Weight of an element given in root coordinates.
    pub fn from_root_coords(&self, c: &[i64]) -> Weight {
        Weight((0..self.rank()).map(|r| (0..self.rank()).map(|j| self.a[r][j] * c[j]).sum()).collect())
    }

    /// Root coordinates `A^{-1} lambda` (rational in general).
    pub fn root_coords(&self, lambda: &Weight) -> Vec<BigRational> {
        self.a_inv.iter().map(|row| row.iter().zip(&lambda.0).map(|(x, &c)| x * rat(c)).sum()).collect()
    }

    /// `lambda(a_i^vee)`.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> i64 {
        lambda.coord(i)
    }

    /// `(lambda, a_i) = d_i lambda(a_i^vee)`.
    pub fn form_with_simple_root(&self, lambda: &Weight, i: usize) -> i64 {
        self.d[i - 1] * lambda.coord(i)
    }

    /// The invariant form `(lambda, mu)`, normalized by `(a_i, a_i) = 2 d_i`.
    pub fn form(&self, lambda: &Weight, mu: &Weight) -> BigRational {
        self.root_coords(lambda).into_iter().enumerate().map(|(i, c)| c * rat(self.d[i] * mu.0[i])).sum()
    }

    /// `s_i lambda = lambda - lambda(a_i^vee) a_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.coord(i);
        if c == 0 {
            return lambda.clone();
        }
        lambda - &self.simple_root(i).scaled(c)
    }

    /// Apply a word of simple reflections `s_{i_1} ... s_{i_k}` (rightmost first).
    pub fn act_word(&self, word: &[usize], lambda: &Weight) -> Weight {
        word.iter().rev().fold(lambda.clone(), |mu, &i| self.reflect(i, &mu))
    }

    pub fn weyl_act(&self, w: &GroupElement, lambda: &Weight) -> Result<Weight, CartanError> {
        self.check(lambda)?;
        Ok(self.act_word(&self.weyl.reduced_word(w), lambda))
    }

    /// Positive roots of `W_J` in root coordinates.
    pub fn positive_roots_of(&self, j: &SubsetJ) -> Vec<Vec<i64>> {
        self.weyl
            .positive_roots()
            .iter()
            .filter(|beta| beta.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(i + 1)))
            .cloned()
            .collect()
    }

    /// `(mu, rho_J)` and `rho_J^vee(mu)`, where `rho_J` is half the sum of the
    /// positive roots of `J` and `rho_J^vee` half the sum of their coroots.
    /// `rho_J^vee(a_i) = 1` for `i` in `J` and it kills weights orthogonal to `J`.
    pub fn rho_functionals(&self, j: &SubsetJ, mu: &Weight) -> Result<(BigRational, BigRational), CartanError> {
        self.check(mu)?;
        let half = BigRational::new(1.into(), 2.into());
        let mut pair = BigRational::zero();
        let mut vee = BigRational::zero();
        for beta in self.positive_roots_of(j) {
            let bw = self.from_root_coords(&beta);
            let mb = self.form(mu, &bw);
            let bb = self.form(&bw, &bw);
            vee += rat(2) * &mb / bb;
            pair += mb;
        }
        Ok((pair * &half, vee * half))
    }

    /// `a_k = (s_{i_{k+1}} ... s_{i_m} lambda)(a_{i_k}^vee)` for a reduced word and dominant `lambda`.
    pub fn extremal_exponents(&self, word: &[usize], lambda: &Weight) -> Result<Vec<i64>, CartanError> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(CartanError::NotDominant(lambda.clone()));
        }
        let w = self.weyl.from_word(word)?;
        if self.weyl.length(&w) != word.len() {
            return Err(CartanError::NotReduced(word.to_vec()));
        }
        let mut out = vec![0; word.len()];
        let mut mu = lambda.clone();
        for (k, &i) in word.iter().enumerate().rev() {
            out[k] = mu.coord(i);
            mu = self.reflect(i, &mu);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn sl3_form() {
        let c = CartanDatum::sl3();
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(c.form(&w1, &w1), r(2, 3));
        let a1 = c.simple_root(1);
        assert_eq!(a1, Weight(vec![2, -1]));
        assert_eq!(c.form(&a1, &a1), r(2, 1));
        assert_eq!(c.pairing(&w1, 1), 1);
        assert_eq!(c.pairing(&w1, 2), 0);
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(CartanDatum::from_type("B2").unwrap().symmetrizer(), &[2, 1]);
        assert_eq!(CartanDatum::from_type("G2").unwrap().symmetrizer(), &[1, 3]);
        assert_eq!(CartanDatum::from_type("B3").unwrap().symmetrizer(), &[2, 2, 1]);
        assert_eq!(CartanDatum::from_type("A1xA2").unwrap().symmetrizer(), &[1, 1, 1]);
        let g2 = CartanDatum::from_type("G2").unwrap();
        assert_eq!(g2.form(&g2.simple_root(2), &g2.simple_root(2)), r(6, 1));
    }

    #[test]
    fn weyl_action_examples() {
        let c = CartanDatum::sl3();
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(c.reflect(1, &w1), Weight(vec![-1, 1]));
        assert_eq!(c.reflect(2, &w1), w1);
        let w0 = c.weyl().longest_element(&c.weyl().index_set()).unwrap();
        assert_eq!(c.weyl_act(&w0, &w1).unwrap(), Weight(vec![0, -1]));
    }

    #[test]
    fn rho_values() {
        let c = CartanDatum::sl3();
        let all = c.weyl().index_set();
        for i in 1..=2 {
            assert_eq!(c.rho_functionals(&all, &c.simple_root(i)).unwrap().1, r(1, 1));
        }
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(c.rho_functionals(&all, &w1).unwrap(), (r(1, 1), r(1, 1)));
        assert_eq!(c.rho_functionals(&SubsetJ::empty(), &w1).unwrap(), (r(0, 1), r(0, 1)));
        // J = {1}: rho_J^vee(mu) = mu_1 / 2
        assert_eq!(c.rho_functionals(&SubsetJ::new([1]), &Weight(vec![3, 5])).unwrap().1, r(3, 2));
    }

    #[test]
    fn exponents() {
        let c = CartanDatum::sl3();
        assert_eq!(c.extremal_exponents(&[1, 2, 1], &Weight(vec![1, 0])).unwrap(), vec![0, 1, 1]);
        assert_eq!(c.extremal_exponents(&[1, 2, 1], &Weight(vec![1, 1])).unwrap(), vec![1, 2, 1]);
        assert_eq!(c.extremal_exponents(&[2], &Weight(vec![0, 4])).unwrap(), vec![4]);
        assert!(c.extremal_exponents(&[1, 1], &Weight(vec![1, 0])).is_err());
        assert!(c.extremal_exponents(&[1], &Weight(vec![-1, 0])).is_err());
    }
}
