//! Machine-readable verification reports.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verified identity.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// The identity being checked, stated in words.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Dimension of the module checked, for per-module checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub wall_ms: f64,
}

impl Check {
    /// Time `f` and record its outcome.
    pub fn run(name: impl Into<String>, anchor: impl Into<String>, f: impl FnOnce() -> Result<(), Value>) -> Check {
        let start = Instant::now();
        let outcome = f();
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        Check { name: name.into(), anchor: anchor.into(), status, witness, dim: None, wall_ms }
    }

    pub fn skipped(name: impl Into<String>, anchor: impl Into<String>, reason: &str) -> Check {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Skipped,
            witness: Some(Value::String(reason.to_string())),
            dim: None,
            wall_ms: 0.0,
        }
    }

    pub fn with_dim(mut self, dim: usize) -> Check {
        self.dim = Some(dim);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// `{version, config, checks}`.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(config: Value, checks: Vec<Check>) -> Report {
        Report { version: env!("CARGO_PKG_VERSION").to_string(), config, checks }
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn ok(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `{lambda, dim, checks, timings}` for one module.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    pub lambda: [i64; 2],
    pub dim: usize,
    pub checks: Vec<Check>,
    pub timings: Value,
}

impl ModuleReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}
