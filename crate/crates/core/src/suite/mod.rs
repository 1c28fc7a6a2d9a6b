//! Identity registry and verification runner.
//!
//! Every case expands into one [`Report`] per sampled parameter point.
//! Cases run concurrently but reports always come back in registry order.

mod registry;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Canonical;
use crate::Witness;

pub use registry::registry;

/// How a case establishes its identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ExactSymbolic,
    NumericSeries,
    PadicConvergence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedDomain,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedDomain => "skipped-domain",
        }
    }
}

/// Result of one case at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub params: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub abs_error: Option<f64>,
    pub elapsed_ms: f64,
}

impl Check {
    fn timed(params: String, f: impl FnOnce() -> (Status, String, String, Option<f64>)) -> Check {
        let start = Instant::now();
        let (status, lhs, rhs, abs_error) = f();
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        Check { params, status, lhs, rhs, abs_error, elapsed_ms }
    }

    /// Compares both sides of an exact witness.
    pub fn exact<T: Canonical + PartialEq>(params: impl Into<String>, f: impl FnOnce() -> Witness<T>) -> Check {
        Check::timed(params.into(), || {
            let w = f();
            let (lhs, rhs) = w.render();
            (if w.holds() { Status::Pass } else { Status::Fail }, lhs, rhs, None)
        })
    }

    /// Like [`Check::exact`] for computations that may fail; an error is a failure.
    pub fn fallible<T: Canonical + PartialEq>(params: impl Into<String>, f: impl FnOnce() -> Result<Witness<T>>) -> Check {
        Check::timed(params.into(), || match f() {
            Ok(w) => {
                let (lhs, rhs) = w.render();
                (if w.holds() { Status::Pass } else { Status::Fail }, lhs, rhs, None)
            }
            Err(e) => (Status::Fail, e.to_string(), String::new(), None),
        })
    }

    /// A floating-point series comparison; divergence and domain errors skip.
    pub fn series(params: impl Into<String>, f: impl FnOnce() -> Result<crate::analysis::SeriesEvalReport>) -> Check {
        Check::timed(params.into(), || match f() {
            Ok(r) => {
                let status = if r.converged { Status::Pass } else { Status::Fail };
                (status, format_float(r.lhs), format_float(r.rhs), Some(r.abs_error))
            }
            Err(Error::Divergence(m) | Error::Domain(m)) => (Status::SkippedDomain, m, String::new(), None),
            Err(e) => (Status::Fail, e.to_string(), String::new(), None),
        })
    }
}

/// Fixed 17-significant-digit rendering used for every float the suite emits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// A registered identity.
#[derive(Clone, Copy)]
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    /// Human-readable parameter range, in terms of `max_n`.
    pub range: &'static str,
    pub mode: Mode,
    pub run: fn(usize) -> Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub id: String,
    #[serde(flatten)]
    pub check: Check,
}

/// Runs every registered case whose id matches the glob `filter`.
pub fn run_suite(filter: &str, max_n: usize) -> Result<Vec<Report>> {
    run_cases(&registry(), filter, max_n)
}

/// Runs the matching subset of `cases`, preserving their order.
pub fn run_cases(cases: &[IdentityCase], filter: &str, max_n: usize) -> Result<Vec<Report>> {
    let pattern = glob::Pattern::new(filter).map_err(|e| Error::Usage(format!("bad filter {filter:?}: {e}")))?;
    let selected: Vec<&IdentityCase> = cases.iter().filter(|c| pattern.matches(c.id)).collect();
    if selected.is_empty() {
        return Err(Error::Usage(format!("no identity matches {filter:?}")));
    }
    let per_case: Vec<Vec<Report>> = selected
        .par_iter()
        .map(|c| {
            (c.run)(max_n)
                .into_iter()
                .map(|check| Report { id: c.id.to_string(), check })
                .collect()
        })
        .collect();
    Ok(per_case.into_iter().flatten().collect())
}

/// `1` if any report failed, else `0`.
pub fn exit_code(reports: &[Report]) -> i32 {
    i32::from(reports.iter().any(|r| r.check.status == Status::Fail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn passing(_: usize) -> Vec<Check> {
        vec![Check::exact("n=0", || Witness::new(int(1), int(1)))]
    }

    fn failing(max_n: usize) -> Vec<Check> {
        (0..=max_n).map(|n| Check::exact(format!("n={n}"), || Witness::new(int(n as i64), int(0)))).collect()
    }

    fn injected() -> Vec<IdentityCase> {
        let case = |id, run| IdentityCase { id, description: "", range: "", mode: Mode::ExactSymbolic, run };
        vec![case("good", passing as fn(usize) -> Vec<Check>), case("bad", failing)]
    }

    #[test]
    fn exit_code_tracks_failures() {
        let cases = injected();
        let good = run_cases(&cases, "good", 3).unwrap();
        assert_eq!(exit_code(&good), 0);
        let all = run_cases(&cases, "*", 3).unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(all[0].id, "good");
        assert_eq!(all[1].check.status, Status::Pass);
        assert!(all[2..].iter().all(|r| r.check.status == Status::Fail));
        assert_eq!(exit_code(&all), 1);
    }

    #[test]
    fn failures_carry_both_witnesses() {
        let r = run_cases(&injected(), "bad", 1).unwrap();
        assert_eq!((r[1].check.lhs.as_str(), r[1].check.rhs.as_str()), ("1", "0"));
    }

    #[test]
    fn empty_selection_is_usage_error() {
        assert!(matches!(run_cases(&injected(), "nosuch*", 3), Err(Error::Usage(_))));
        assert!(matches!(run_suite("nosuch*", 3), Err(Error::Usage(_))));
        assert!(matches!(run_cases(&injected(), "[", 3), Err(Error::Usage(_))));
    }

    #[test]
    fn float_format_is_fixed() {
        assert_eq!(format_float(2.0), "2.0000000000000000e0");
        assert_eq!(format_float(5.0 / 9.0), "5.5555555555555558e-1");
    }
}
