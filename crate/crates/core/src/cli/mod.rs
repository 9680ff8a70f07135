//! Batch verification driver: configuration, the check catalog, concurrent
//! execution and the JSON report.
//!
//! A report is one JSON document:
//!
//! ```text
//! {
//!   "version": "0.1.0",
//!   "config": { "algebra": "sl2", "seed": 0, ... },
//!   "records": [
//!     { "check", "theorem_anchor", "algebra", "point", "status",
//!       "expected", "computed", "witness", "elapsed_ms" },
//!     ...
//!   ],
//!   "summary": { "passed": 40, "failed": 0, "skipped": 3 }
//! }
//! ```
//!
//! Records are sorted by check name, then by point index. Only `elapsed_ms`
//! depends on the run; everything else is a function of the configuration.

mod checks;

pub use checks::{list_checks, CheckInfo};

use crate::commuting::CommutingError;
use crate::groebner::cache::{GbCache, GcStats};
use crate::groebner::{GroebnerError, Limits};
use crate::liealg::{resolve_algebra, LieAlgebraData};
use serde::Serialize;
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// Environment variable that overrides the cache directory.
pub const CACHE_DIR_ENV: &str = "COMMVAR_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("unknown check `{0}` (see `commvar list`)")]
    UnknownCheck(String),
    #[error("algebra: {0}")]
    Algebra(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("output: {0}")]
    Output(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitsConfig {
    pub max_pairs: u64,
    pub max_degree: u32,
    /// Wall-clock budget for the Gröbner computations of one check.
    pub timeout_s: u64,
}

impl Default for LimitsConfig {
    fn default() -> Self {
        LimitsConfig {
            max_pairs: 1_000_000,
            max_degree: 30,
            timeout_s: 600,
        }
    }
}

impl LimitsConfig {
    /// Fresh limits with the deadline counted from now.
    pub fn start(&self) -> Limits {
        Limits {
            max_pairs: self.max_pairs,
            max_degree: self.max_degree,
            deadline: None,
        }
        .with_timeout(Duration::from_secs(self.timeout_s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// `sl2`, `sl3` or a path to a JSON algebra.
    pub algebra: String,
    pub seed: u64,
    /// Points drawn for the pointwise checks.
    pub sample_count: usize,
    pub limits: LimitsConfig,
    /// Check names; empty or `["all"]` selects the whole catalog.
    pub checks: Vec<String>,
    /// `None` disables the on-disk cache.
    pub cache_dir: Option<PathBuf>,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
    /// Upper bound on checks run concurrently.
    pub jobs: usize,
    /// Enables the expensive checks (sl3 resolution and generation).
    pub heavy: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algebra: "sl2".into(),
            seed: 0,
            sample_count: 100,
            limits: LimitsConfig::default(),
            checks: Vec::new(),
            cache_dir: None,
            output: None,
            jobs: 1,
            heavy: false,
        }
    }
}

impl RunConfig {
    /// The selected catalog entries, in catalog order.
    pub fn selected(&self) -> Result<Vec<&'static CheckInfo>, CliError> {
        let catalog = list_checks();
        if self.checks.is_empty() || self.checks.iter().any(|c| c == "all") {
            return Ok(catalog.iter().collect());
        }
        for name in &self.checks {
            if !catalog.iter().any(|c| c.name == name) {
                return Err(CliError::UnknownCheck(name.clone()));
            }
        }
        Ok(catalog.iter().filter(|c| self.checks.iter().any(|n| n == c.name)).collect())
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.jobs == 0 {
            return Err(CliError::Config("jobs must be at least 1".into()));
        }
        if self.limits.timeout_s == 0 {
            return Err(CliError::Config("timeout must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub check: String,
    pub theorem_anchor: String,
    pub algebra: String,
    /// The point label, or `"symbolic"`.
    pub point: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub witness: Value,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub index: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// 0 iff no record failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.failed > 0)
    }

    pub fn records_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.check == check)
    }

    pub fn write(&self, output: Option<&Path>) -> Result<(), CliError> {
        let text = self.to_json();
        match output {
            Some(p) => std::fs::write(p, text).map_err(|e| CliError::Output(format!("{}: {e}", p.display()))),
            None => {
                use std::io::Write;
                std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|e| CliError::Output(e.to_string()))
            }
        }
    }
}

/// The cache directory: the explicit setting, else the environment
/// override, else none.
pub fn resolve_cache_dir(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

/// Outcome of one check at one point, before the driver adds names and
/// timing.
#[derive(Clone, Debug)]
pub(crate) struct Outcome {
    pub index: usize,
    pub point: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub witness: Value,
}

impl Outcome {
    pub fn skipped(index: usize, point: String, reason: &str) -> Self {
        Outcome {
            index,
            point,
            status: Status::Skipped,
            expected: Value::Null,
            computed: Value::Null,
            witness: Value::String(reason.into()),
        }
    }
}

/// A check failure that is not a mathematical mismatch.
#[derive(Clone, Debug)]
pub(crate) enum CheckError {
    /// Ran out of budget: reported as skipped.
    Timeout(String),
    /// Not applicable to this algebra: reported as skipped.
    Unsupported(String),
    Other(String),
}

macro_rules! other_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CheckError {
            fn from(e: $t) -> Self {
                CheckError::Other(e.to_string())
            }
        }
    )*};
}

other_error!(
    crate::liealg::LieError,
    crate::poly::PolyError,
    crate::invariants::InvariantError,
    crate::shiftfam::ShiftError
);

impl From<GroebnerError> for CheckError {
    fn from(e: GroebnerError) -> Self {
        match &e {
            GroebnerError::ResourceLimit { reason, .. } if reason == "timeout" => CheckError::Timeout(e.to_string()),
            _ => CheckError::Other(e.to_string()),
        }
    }
}

impl From<CommutingError> for CheckError {
    fn from(e: CommutingError) -> Self {
        match e {
            CommutingError::Groebner(g) => g.into(),
            CommutingError::Unsupported(why) => CheckError::Unsupported(why),
            other => CheckError::Other(other.to_string()),
        }
    }
}

/// Runs the selected checks and assembles the report. Configuration errors
/// are returned before any check starts; errors inside a check become
/// failed (or, for timeouts and inapplicable checks, skipped) records.
pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    config.validate()?;
    let selected = config.selected()?;
    let algebra = resolve_algebra(&config.algebra).map_err(|e| CliError::Algebra(e.to_string()))?;
    let cache = match &config.cache_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| CliError::Cache(format!("{}: {e}", dir.display())))?;
            GbCache::new(dir)
        }
        None => GbCache::disabled(),
    };
    let ctx = checks::Context::new(algebra, config.clone(), cache);
    let results: Mutex<Vec<Record>> = Mutex::new(Vec::new());
    let next = AtomicUsize::new(0);
    let workers = config.jobs.min(selected.len()).max(1);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                let Some(info) = selected.get(k) else { break };
                let records = run_one(&ctx, info);
                results.lock().expect("no poisoned workers").extend(records);
            });
        }
    });
    let mut records = results.into_inner().expect("no poisoned workers");
    records.sort_by(|a, b| a.check.cmp(&b.check).then(a.index.cmp(&b.index)));
    let mut summary = Summary::default();
    for r in &records {
        match r.status {
            Status::Passed => summary.passed += 1,
            Status::Failed => summary.failed += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        records,
        summary,
    })
}

fn run_one(ctx: &checks::Context, info: &CheckInfo) -> Vec<Record> {
    let started = Instant::now();
    let outcomes = match (info.run)(ctx) {
        Ok(o) => o,
        Err(CheckError::Timeout(why)) => vec![Outcome::skipped(0, "symbolic".into(), &why)],
        Err(CheckError::Unsupported(why)) => vec![Outcome::skipped(0, "symbolic".into(), &why)],
        Err(CheckError::Other(why)) => vec![Outcome {
            status: Status::Failed,
            ..Outcome::skipped(0, "symbolic".into(), &why)
        }],
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;
    outcomes
        .into_iter()
        .map(|o| Record {
            check: info.name.to_string(),
            theorem_anchor: info.anchor.to_string(),
            algebra: ctx.algebra_name().to_string(),
            point: o.point,
            status: o.status,
            expected: o.expected,
            computed: o.computed,
            witness: o.witness,
            elapsed_ms,
            index: o.index,
        })
        .collect()
}

/// Removes cache entries whose header does not match the current format.
pub fn cache_gc(dir: &Path) -> Result<GcStats, CliError> {
    if !dir.exists() {
        return Ok(GcStats::default());
    }
    GbCache::new(dir).gc().map_err(|e| CliError::Cache(e.to_string()))
}

/// The resolved algebra for a selector, for callers that only need the data.
pub fn load_algebra(selector: &str) -> Result<LieAlgebraData, CliError> {
    resolve_algebra(selector).map_err(|e| CliError::Algebra(e.to_string()))
}

#[cfg(test)]
mod tests;
