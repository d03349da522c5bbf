//! Machine-readable results for the verification suites.
//!
//! Every identity check in the crate produces [`CheckRecord`]s; a suite bundles
//! them into a [`Report`]. Records are kept in a canonical order (sorted by
//! id) so that serialized reports are byte-stable run to run.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    /// Stable identifier, unique within a suite.
    pub id: String,
    /// Human-readable statement of the identity that was checked.
    pub identity: String,
    pub backend: Backend,
    pub status: Status,
    /// Worst observed deviation; only float-backend checks carry one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_abs_error: Option<f64>,
}

impl CheckRecord {
    /// Record for an exact-backend check: pass/fail, no error magnitude.
    pub fn exact(id: impl Into<String>, identity: impl Into<String>, pass: bool) -> Self {
        CheckRecord {
            id: id.into(),
            identity: identity.into(),
            backend: Backend::Exact,
            status: if pass { Status::Pass } else { Status::Fail },
            max_abs_error: None,
        }
    }

    /// Record for a float-backend check judged against a tolerance.
    pub fn float(
        id: impl Into<String>,
        identity: impl Into<String>,
        max_abs_error: f64,
        tol: f64,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            identity: identity.into(),
            backend: Backend::Float,
            status: if max_abs_error <= tol {
                Status::Pass
            } else {
                Status::Fail
            },
            max_abs_error: Some(max_abs_error),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    /// Bundle records into a report; sorts by id and tallies the summary.
    pub fn from_records(suite: impl Into<String>, mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = records.iter().filter(|r| r.passed()).count();
        let total = records.len();
        Report {
            suite: suite.into(),
            records,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Concatenate several reports into one suite (records re-sorted by id).
    pub fn merged(suite: impl Into<String>, parts: Vec<Report>) -> Self {
        let records = parts.into_iter().flat_map(|r| r.records).collect();
        Report::from_records(suite, records)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_matches_tallies() {
        let report = Report::from_records(
            "demo",
            vec![
                CheckRecord::exact("b", "x = x", true),
                CheckRecord::float("a", "y ≈ y", 1e-13, 1e-12),
                CheckRecord::float("c", "z ≈ z", 1.0, 1e-12),
            ],
        );
        assert_eq!(report.summary.total, 3);
        assert_eq!(report.summary.passed, 2);
        assert_eq!(report.summary.failed, 1);
        assert!(!report.all_passed());
        // canonical order
        let ids: Vec<_> = report.records.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["a", "b", "c"]);
    }

    #[test]
    fn exact_records_carry_no_error_field() {
        let r = CheckRecord::exact("id", "x", true);
        assert!(r.max_abs_error.is_none());
        let r = CheckRecord::float("id", "x", 0.0, 1e-12);
        assert!(r.max_abs_error.is_some());
    }
}
