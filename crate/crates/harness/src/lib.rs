//! Seeded property suites for `krullstar`.
//!
//! Every case of a suite draws its inputs from its own generator, seeded from
//! the run seed and the case index, so a failing case replays in isolation.
//! Failing cases are re-run under smaller generator configurations and the
//! smallest configuration that still fails is reported.

pub mod gen;
pub mod oracle;
mod suites;

use std::panic::{self, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub use gen::{case_seed, AtomWeights, Gen, GenConfig};

pub const DEFAULT_CASES: usize = 200;
pub const CI_CASES: usize = 1000;

/// Outcome of one case: `Err` carries the description of the violated property.
pub type CaseResult = Result<(), String>;

pub type CaseFn = fn(&mut Gen) -> CaseResult;

#[derive(Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub case: CaseFn,
    /// Adjusts the caller's configuration, e.g. to pin the rings a suite needs.
    pub prepare: fn(&mut GenConfig),
}

pub fn suites() -> &'static [Suite] {
    suites::ALL
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    suites::ALL.iter().find(|s| s.name == name)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("UnknownSuite: {0}")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrunkConfig {
    pub max_components: usize,
    pub coeff_bound: i64,
    pub poly_degree: u32,
    pub nagata_degree: u32,
    pub max_generators: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    /// Seed of the generator used by this case.
    pub seed: u64,
    pub message: String,
    pub shrunk: Option<ShrunkConfig>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.ok() { "pass" } else { "FAIL" };
        writeln!(f, "suite {}: {verdict} ({}/{} cases, seed {})", self.name, self.passed, self.cases, self.seed)?;
        for x in &self.failures {
            writeln!(f, "  case {} (case seed {}): {}", x.index, x.seed, x.message)?;
            if let Some(s) = &x.shrunk {
                writeln!(
                    f,
                    "    shrunk to components={} coeff_bound={} poly_degree={} nagata_degree={} generators={}: {}",
                    s.max_components, s.coeff_bound, s.poly_degree, s.nagata_degree, s.max_generators, s.message
                )?;
            }
        }
        Ok(())
    }
}

/// Runs case `i` of `case` under `cfg`, turning panics into failures.
pub fn run_case(case: CaseFn, cfg: &GenConfig, i: usize) -> CaseResult {
    let mut g = Gen::for_case(cfg, i);
    match panic::catch_unwind(AssertUnwindSafe(|| case(&mut g))) {
        Ok(r) => r,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panic: {msg}"))
        }
    }
}

fn smaller_configs(cfg: &GenConfig) -> Vec<GenConfig> {
    let mut out = Vec::new();
    let mut push = |f: &dyn Fn(&mut GenConfig)| {
        let mut c = cfg.clone();
        f(&mut c);
        if !same_shape(&c, cfg) {
            out.push(c);
        }
    };
    push(&|c| c.max_components = 1);
    push(&|c| c.max_components = c.max_components.saturating_sub(1).max(1));
    push(&|c| c.max_generators = 1);
    push(&|c| c.max_generators = c.max_generators.saturating_sub(1).max(1));
    push(&|c| c.coeff_bound = (c.coeff_bound / 2).max(1));
    push(&|c| c.poly_degree = c.poly_degree.saturating_sub(1).max(1));
    push(&|c| c.nagata_degree = c.nagata_degree.saturating_sub(1));
    out
}

fn same_shape(a: &GenConfig, b: &GenConfig) -> bool {
    a.max_components == b.max_components
        && a.max_generators == b.max_generators
        && a.coeff_bound == b.coeff_bound
        && a.poly_degree == b.poly_degree
        && a.nagata_degree == b.nagata_degree
}

/// Greedily shrinks the configuration of a failing case, keeping a reduction
/// only when the case still fails under it. Returns `None` when no reduction
/// keeps the failure.
pub fn shrink(case: CaseFn, cfg: &GenConfig, i: usize) -> Option<ShrunkConfig> {
    let mut cur = cfg.clone();
    let mut msg = None;
    let mut budget = 64;
    'outer: while budget > 0 {
        for c in smaller_configs(&cur) {
            budget -= 1;
            if let Err(m) = run_case(case, &c, i) {
                cur = c;
                msg = Some(m);
                continue 'outer;
            }
        }
        break;
    }
    msg.map(|message| ShrunkConfig {
        max_components: cur.max_components,
        coeff_bound: cur.coeff_bound,
        poly_degree: cur.poly_degree,
        nagata_degree: cur.nagata_degree,
        max_generators: cur.max_generators,
        message,
    })
}

/// Runs `cases` cases of `case` on all available cores and merges the results
/// by case index.
pub fn run_cases(name: &str, case: CaseFn, cases: usize, cfg: &GenConfig) -> SuiteReport {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(cases.max(1));
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, CaseResult)>> = Mutex::new(Vec::with_capacity(cases));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= cases {
                    break;
                }
                let r = run_case(case, cfg, i);
                results.lock().unwrap().push((i, r));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(i, _)| *i);
    let mut failures = Vec::new();
    for (i, r) in &results {
        if let Err(message) = r {
            failures.push(Failure { index: *i, seed: case_seed(cfg.seed, *i), message: message.clone(), shrunk: None });
        }
    }
    for f in failures.iter_mut().take(3) {
        f.shrunk = shrink(case, cfg, f.index);
    }
    SuiteReport {
        name: name.to_string(),
        seed: cfg.seed,
        cases,
        passed: cases - failures.len(),
        failures,
    }
}

pub fn run_suite(name: &str, cases: usize, cfg: &GenConfig) -> Result<SuiteReport, HarnessError> {
    let suite = find_suite(name).ok_or_else(|| HarnessError::UnknownSuite(name.to_string()))?;
    let mut cfg = cfg.clone();
    (suite.prepare)(&mut cfg);
    Ok(run_cases(suite.name, suite.case, cases, &cfg))
}
