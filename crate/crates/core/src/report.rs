//! Check results and the JSON report schema.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::case::Case;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    ProbabilisticPass,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// PASS, PROBABILISTIC_PASS and SKIP do not fail a run.
    pub fn is_ok(self) -> bool {
        self != Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::ProbabilisticPass => "PROBABILISTIC_PASS",
        };
        write!(f, "{s}")
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The mathematical statement being checked.
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub data: Option<serde_json::Value>,
}

impl Check {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, status: Status) -> Self {
        Check {
            id: id.into(),
            paper_ref: statement.into(),
            status,
            witness: None,
            certificate_path: None,
            data: None,
        }
    }

    pub fn pass_if(id: impl Into<String>, statement: impl Into<String>, ok: bool) -> Self {
        Self::new(id, statement, Status::from_bool(ok))
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn with_data(mut self, v: serde_json::Value) -> Self {
        self.data = Some(v);
        self
    }

    /// Attach a witness only when the check failed.
    pub fn witness_on_fail(self, w: impl FnOnce() -> String) -> Self {
        if self.status == Status::Fail {
            self.with_witness(w())
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseInfo {
    pub tau: u8,
    pub n: usize,
    pub mode: String,
    pub seed: Option<u64>,
}

/// A full report: case header, checks and the discrepancy ledger entries
/// relevant to the run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: CaseInfo,
    pub checks: Vec<Check>,
    pub discrepancies: Vec<crate::discrepancy::Discrepancy>,
}

impl Report {
    pub fn new(case: Case, mode: impl Into<String>, seed: Option<u64>) -> Self {
        Report {
            case: CaseInfo {
                tau: case.tau,
                n: case.n,
                mode: mode.into(),
                seed,
            },
            checks: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.status.is_ok())
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.status.is_ok()).collect()
    }

    /// Pretty JSON with a trailing newline; deterministic for equal reports.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
