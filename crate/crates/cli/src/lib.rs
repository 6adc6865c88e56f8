//! Batch verification driver behind the `cactus` binary.
//!
//! Every command is a plain function returning JSON-serializable data, so the
//! binary is a thin argument parser and the acceptance tests call the same code.

pub mod report;
pub mod suites;

use std::time::Instant;

use coxeter::{CoxeterDatum, KernelMode, SubsetJ};
use crystal::Pattern;
use rayon::prelude::*;
use repmodule::{export_matrices, MatrixName, ModuleVLambda};
use serde_json::{json, Value};

pub use report::{Check, ModuleReport, Report, Status};
pub use suites::{ModuleSuite, SuiteName};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Module(#[from] repmodule::ModuleError),
    #[error(transparent)]
    Coxeter(#[from] coxeter::CoxeterError),
    #[error(transparent)]
    Crystal(#[from] crystal::CrystalError),
    #[error(transparent)]
    Gk(#[from] gkmodel::GkError),
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("{0}")]
    BadArgument(String),
}

const CONJECTURE_ANCHOR: &str = "(N^i)^2 = 1 and (N^1 N^2)^3 = 1, exact";

fn conjecture_check(l1: i64, l2: i64) -> Check {
    let mut dim = None;
    let check = Check::run(format!("lambda=({l1},{l2})"), CONJECTURE_ANCHOR, || {
        let m = ModuleVLambda::new(l1, l2).map_err(|e| json!(e.to_string()))?;
        dim = Some(m.dim());
        repmodule::involution_check(&m)?;
        repmodule::conjecture_order_three(&m)
    });
    match dim {
        Some(d) => check.with_dim(d),
        None => check,
    }
}

/// Check the involutions and the order-three relation on every `V_{l1,l2}`
/// with `l1 + l2 <= max_degree`, spreading modules over `jobs` threads.
/// Checks come back sorted by `(l1, l2)` whatever the scheduling.
pub fn verify_conjecture(max_degree: i64, jobs: usize) -> Result<Report, CliError> {
    if max_degree < 0 || jobs == 0 {
        return Err(CliError::BadArgument("max-degree must be >= 0 and jobs >= 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let mut weights = suites::weights_up_to(max_degree);
    // largest modules first so the long tasks start early
    weights.sort_by_key(|&(l1, l2)| std::cmp::Reverse(crystal::props::weyl_dimension(l1, l2)));
    let mut results: Vec<((i64, i64), Check)> =
        pool.install(|| weights.par_iter().map(|&(l1, l2)| ((l1, l2), conjecture_check(l1, l2))).collect());
    results.sort_by_key(|(w, _)| *w);
    let config = json!({"command": "verify-conjecture", "max_degree": max_degree, "jobs": jobs});
    Ok(Report::new(config, results.into_iter().map(|(_, c)| c).collect()))
}

/// Run the per-module checks of the given groups on `V_{l1,l2}`.
pub fn module_verify(l1: i64, l2: i64, groups: &[ModuleSuite]) -> Result<ModuleReport, CliError> {
    let start = Instant::now();
    let m = suites::module(l1, l2)?;
    let build_ms = start.elapsed().as_secs_f64() * 1e3;
    let checks: Vec<Check> = groups
        .iter()
        .flat_map(|&g| suites::module_checks(g))
        .map(|(name, anchor, check)| Check::run(name, anchor, || check(&m)))
        .collect();
    let total_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(ModuleReport {
        lambda: [l1, l2],
        dim: m.dim(),
        checks,
        timings: json!({"build_ms": build_ms, "total_ms": total_ms}),
    })
}

/// Parse a comma-separated list such as `"C1,P2,N1"`.
pub fn parse_matrix_names(s: &str) -> Result<Vec<MatrixName>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<MatrixName>().map_err(CliError::from))
        .collect()
}

pub fn module_export(l1: i64, l2: i64, which: &[MatrixName]) -> Result<Value, CliError> {
    let m = suites::module(l1, l2)?;
    Ok(export_matrices(&m, which)?)
}

/// `K_J` by formula and by brute force, as reduced words, plus their agreement.
pub fn coxeter_kernel(cartan_type: &str, subset: &str) -> Result<(Value, Report), CliError> {
    let d = CoxeterDatum::from_type(cartan_type)?;
    let j = SubsetJ::parse(subset)?;
    if let Some(bad) = j.iter().find(|&i| i == 0 || i > d.rank()) {
        return Err(coxeter::CoxeterError::UnknownIndex(bad).into());
    }
    let words = |mode| -> Result<Vec<Vec<usize>>, CliError> {
        let mut w: Vec<Vec<usize>> = d.kernel_parabolic(&j, mode)?.iter().map(|g| d.reduced_word(g)).collect();
        w.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        Ok(w)
    };
    let formula = words(KernelMode::Formula)?;
    let brute = words(KernelMode::BruteForce)?;
    let check = Check::run("kernel_agreement", "kernel of W on W/W_J: formula equals brute force", || {
        if formula == brute {
            Ok(())
        } else {
            Err(json!({"formula_order": formula.len(), "bruteforce_order": brute.len()}))
        }
    });
    let detail = json!({
        "type": d.name(),
        "J": j.to_string(),
        "formula": {"order": formula.len(), "elements": formula},
        "bruteforce": {"order": brute.len(), "elements": brute},
    });
    let config = json!({"command": "coxeter kernel", "type": cartan_type, "subset": subset});
    Ok((detail, Report::new(config, vec![check])))
}

/// Apply a comma-separated operator list to a pattern, rightmost first.
pub fn crystal_apply(pattern: &str, ops: &str) -> Result<Value, CliError> {
    let m: Pattern = pattern.parse()?;
    let out = m.apply_ops(ops)?;
    Ok(json!({
        "pattern": m.to_string(),
        "ops": ops,
        "result": out.to_string(),
        "result_array": out.to_array(),
        "is_basis": out.is_basis(),
    }))
}

pub fn gk_normalform(expr: &str) -> Result<Value, CliError> {
    Ok(gkmodel::parse_expr(expr)?.to_json())
}

pub fn run_suite(name: SuiteName, seed: u64) -> Report {
    let config = json!({"command": "suite", "name": name.as_str(), "seed": seed});
    Report::new(config, suites::run_suite(name, seed))
}
