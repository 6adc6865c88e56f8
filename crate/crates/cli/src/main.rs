use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use cactus::{CliError, ModuleSuite, SuiteName};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cactus", version, about = "Exact verification of cactus group actions on sl3 modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check (N^i)^2 = 1 and (N^1 N^2)^3 = 1 on every V_(l1,l2) with l1 + l2 <= N.
    VerifyConjecture {
        #[arg(long)]
        max_degree: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Coxeter {
        #[command(subcommand)]
        cmd: CoxeterCmd,
    },
    Crystal {
        #[command(subcommand)]
        cmd: CrystalCmd,
    },
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    Gk {
        #[command(subcommand)]
        cmd: GkCmd,
    },
    /// Run the property suite of one crate, or all of them.
    Suite {
        #[arg(long, value_enum)]
        name: SuiteName,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CoxeterCmd {
    /// Kernel of W acting on W/W_J, by formula and by brute force.
    Kernel {
        #[arg(long = "type")]
        cartan_type: String,
        /// Comma-separated indices, e.g. "1,3"; empty for J = {}.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        subset: String,
    },
}

#[derive(Subcommand)]
enum CrystalCmd {
    /// Apply operators such as "sigma1,sigma,e1^3" right to left.
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        #[arg(long, allow_hyphen_values = true)]
        ops: String,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Run exact checks on V_(l1,l2); all groups unless --suite is given.
    Verify {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
        #[arg(long, value_enum)]
        suite: Option<ModuleSuite>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the sparse matrices C^i, P^i, N^i as JSON.
    Export {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
        #[arg(long, default_value = "C1,C2,P1,P2,N1,N2")]
        which: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GkCmd {
    /// Straighten an expression into the normal-ordered monomial basis.
    Normalform {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
}

fn emit<T: Serialize>(v: &T, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.cmd {
        Cmd::VerifyConjecture { max_degree, jobs, out } => {
            let r = cactus::verify_conjecture(max_degree, jobs)?;
            emit(&r, out.as_ref())?;
            if out.is_some() {
                eprintln!("{} modules checked, {} failed", r.checks.len(), r.failures());
            }
            Ok(r.ok())
        }
        Cmd::Coxeter { cmd: CoxeterCmd::Kernel { cartan_type, subset } } => {
            let (detail, r) = cactus::coxeter_kernel(&cartan_type, &subset)?;
            emit(&json!({"kernel": detail, "report": r}), None)?;
            Ok(r.ok())
        }
        Cmd::Crystal { cmd: CrystalCmd::Apply { pattern, ops } } => {
            emit(&cactus::crystal_apply(&pattern, &ops)?, None)?;
            Ok(true)
        }
        Cmd::Module { cmd: ModuleCmd::Verify { l1, l2, suite, out } } => {
            let groups = match suite {
                Some(g) => vec![g],
                None => vec![ModuleSuite::Relations, ModuleSuite::Sigma, ModuleSuite::Conjecture],
            };
            let r = cactus::module_verify(l1, l2, &groups)?;
            emit(&r, out.as_ref())?;
            Ok(r.ok())
        }
        Cmd::Module { cmd: ModuleCmd::Export { l1, l2, which, out } } => {
            let names = cactus::parse_matrix_names(&which)?;
            emit(&cactus::module_export(l1, l2, &names)?, out.as_ref())?;
            Ok(true)
        }
        Cmd::Gk { cmd: GkCmd::Normalform { expr } } => {
            emit(&cactus::gk_normalform(&expr)?, None)?;
            Ok(true)
        }
        Cmd::Suite { name, seed, out } => {
            let r = cactus::run_suite(name, seed);
            emit(&r, out.as_ref())?;
            Ok(r.ok())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
