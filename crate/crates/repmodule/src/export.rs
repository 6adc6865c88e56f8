//! JSON export of the matrices `C^i`, `P^i`, `N^i`.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::{ModuleError, ModuleVLambda, SparseMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixName {
    C(u8),
    P(u8),
    N(u8),
}

impl FromStr for MatrixName {
    type Err = ModuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ModuleError::UnknownMatrix(s.to_string());
        let (kind, i) = s.split_at_checked(1).ok_or_else(bad)?;
        let i: u8 = i.parse().map_err(|_| bad())?;
        if i != 1 && i != 2 {
            return Err(bad());
        }
        match kind {
            "C" => Ok(MatrixName::C(i)),
            "P" => Ok(MatrixName::P(i)),
            "N" => Ok(MatrixName::N(i)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for MatrixName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixName::C(i) => write!(f, "C{i}"),
            MatrixName::P(i) => write!(f, "P{i}"),
            MatrixName::N(i) => write!(f, "N{i}"),
        }
    }
}

impl ModuleVLambda {
    pub fn named_matrix(&self, name: MatrixName) -> Result<SparseMatrix, ModuleError> {
        match name {
            MatrixName::C(i) => self.matrix_c(i),
            MatrixName::P(i) => self.matrix_p(i),
            MatrixName::N(i) => self.matrix_n(i),
        }
    }
}

/// `{lambda, dim, basis, matrices: {name: {dim, entries: [[row, col, ratfunc]]}}}`.
pub fn export_matrices(m: &ModuleVLambda, which: &[MatrixName]) -> Result<Value, ModuleError> {
    let mut mats = Map::new();
    for name in which {
        mats.insert(name.to_string(), m.named_matrix(*name)?.to_json());
    }
    let basis: Vec<[i64; 6]> = m.basis().iter().map(|p| p.to_array()).collect();
    Ok(json!({
        "lambda": [m.l1(), m.l2()],
        "dim": m.dim(),
        "basis": basis,
        "matrices": mats,
    }))
}
