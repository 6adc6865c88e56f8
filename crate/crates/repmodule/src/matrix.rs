//! Sparse square matrices over Q(v), stored by columns.

use std::collections::BTreeMap;

use qarith::RatFunc;
use serde_json::{json, Value};

use crate::ModuleError;

/// Column `j` lists the nonzero entries `(row, value)` sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    n: usize,
    cols: Vec<Vec<(usize, RatFunc)>>,
}

impl SparseMatrix {
    pub fn zero(n: usize) -> Self {
        SparseMatrix { n, cols: vec![Vec::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { n, cols: (0..n).map(|j| vec![(j, RatFunc::one())]).collect() }
    }

    /// Build from columns; zero entries are dropped and duplicates summed.
    pub fn from_columns(n: usize, cols: Vec<Vec<(usize, RatFunc)>>) -> Self {
        assert_eq!(cols.len(), n, "column count");
        let cols = cols
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, RatFunc> = BTreeMap::new();
                for (r, x) in col {
                    assert!(r < n, "row index out of range");
                    *acc.entry(r).or_default() += &x;
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseMatrix { n, cols }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, RatFunc)] {
        &self.cols[j]
    }

    pub fn get(&self, row: usize, col: usize) -> RatFunc {
        self.cols[col].binary_search_by_key(&row, |(r, _)| *r).map(|k| self.cols[col][k].1.clone()).unwrap_or_default()
    }

    pub fn is_identity(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, col)| col.len() == 1 && col[0].0 == j && col[0].1.is_one())
    }

    /// First entry where `self` and the identity differ.
    pub fn identity_defect(&self) -> Option<(usize, usize, RatFunc)> {
        for (j, col) in self.cols.iter().enumerate() {
            let mut diag_seen = false;
            for (r, x) in col {
                if *r == j {
                    diag_seen = true;
                    if !x.is_one() {
                        return Some((*r, j, x.clone()));
                    }
                } else {
                    return Some((*r, j, x.clone()));
                }
            }
            if !diag_seen {
                return Some((j, j, RatFunc::zero()));
            }
        }
        None
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut acc: Vec<Option<RatFunc>> = vec![None; self.n];
        let mut touched = Vec::new();
        let cols = rhs
            .cols
            .iter()
            .map(|bcol| {
                for (k, b) in bcol {
                    for (r, a) in &self.cols[*k] {
                        let term = a * b;
                        match &mut acc[*r] {
                            Some(x) => *x += &term,
                            slot @ None => {
                                *slot = Some(term);
                                touched.push(*r);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let col =
                    touched.drain(..).filter_map(|r| acc[r].take().filter(|x| !x.is_zero()).map(|x| (r, x))).collect();
                col
            })
            .collect();
        SparseMatrix { n: self.n, cols }
    }

    pub fn pow(&self, k: u32) -> SparseMatrix {
        let mut out = SparseMatrix::identity(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.n];
        for (j, col) in self.cols.iter().enumerate() {
            for (r, x) in col {
                cols[*r].push((j, x.clone()));
            }
        }
        SparseMatrix { n: self.n, cols }
    }

    /// Inverse by Gauss-Jordan elimination on sparse rows, pivoting on the
    /// entry with the smallest representation.
    pub fn inverse(&self) -> Result<SparseMatrix, ModuleError> {
        let n = self.n;
        let mut rows: Vec<BTreeMap<usize, RatFunc>> = vec![BTreeMap::new(); n];
        for (j, col) in self.cols.iter().enumerate() {
            for (r, x) in col {
                rows[*r].insert(j, x.clone());
            }
        }
        let mut aug: Vec<BTreeMap<usize, RatFunc>> = (0..n).map(|i| BTreeMap::from([(i, RatFunc::one())])).collect();
        // rows that still carry an entry in a given column
        let mut col_rows: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
        for (i, row) in rows.iter().enumerate() {
            for j in row.keys() {
                col_rows[*j].insert(i);
            }
        }
        let mut used = vec![false; n];
        let mut pivot_of_col = vec![usize::MAX; n];
        for c in 0..n {
            let p = col_rows[c]
                .iter()
                .copied()
                .filter(|&r| !used[r])
                .min_by_key(|&r| (rows[r][&c].size_hint(), rows[r].len()))
                .ok_or(ModuleError::Singular)?;
            used[p] = true;
            pivot_of_col[c] = p;
            let inv = rows[p][&c].inv().map_err(|_| ModuleError::Singular)?;
            for x in rows[p].values_mut() {
                *x = &*x * &inv;
            }
            for x in aug[p].values_mut() {
                *x = &*x * &inv;
            }
            let prow = rows[p].clone();
            let paug = aug[p].clone();
            let targets: Vec<usize> = col_rows[c].iter().copied().filter(|&r| r != p).collect();
            for r in targets {
                let f = rows[r][&c].clone();
                for (j, x) in &prow {
                    let e = rows[r].entry(*j).or_default();
                    *e -= &(&f * x);
                    if e.is_zero() {
                        rows[r].remove(j);
                        col_rows[*j].remove(&r);
                    } else {
                        col_rows[*j].insert(r);
                    }
                }
                for (j, x) in &paug {
                    let e = aug[r].entry(*j).or_default();
                    *e -= &(&f * x);
                    if e.is_zero() {
                        aug[r].remove(j);
                    }
                }
            }
        }
        // row pivot_of_col[c] of aug is row c of the inverse
        let mut cols = vec![Vec::new(); n];
        for (c, &p) in pivot_of_col.iter().enumerate() {
            for (j, x) in &aug[p] {
                cols[*j].push((c, x.clone()));
            }
        }
        for col in &mut cols {
            col.sort_by_key(|(r, _)| *r);
        }
        Ok(SparseMatrix { n, cols })
    }

    /// `[[row, col, value], ...]` in column order.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> =
            self.cols.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |(r, x)| json!([r, j, x]))).collect();
        json!({"dim": self.n, "entries": entries})
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(k: i32) -> RatFunc {
        RatFunc::v_pow(k)
    }

    #[test]
    fn inverse_of_triangular() {
        let m = SparseMatrix::from_columns(
            3,
            vec![vec![(0, rf(1))], vec![(0, rf(2)), (1, RatFunc::one())], vec![(1, rf(-1)), (2, &rf(1) + &rf(-1))]],
        );
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn singular_is_reported() {
        let m = SparseMatrix::from_columns(2, vec![vec![(0, RatFunc::one())], vec![(0, rf(3))]]);
        assert_eq!(m.inverse(), Err(ModuleError::Singular));
    }
}
