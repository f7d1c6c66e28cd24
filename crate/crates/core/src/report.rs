//! Report rows shared by the catalog suite, WZ verification and the CLI.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub n: Option<u64>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub reason: Option<String>,
}

impl Row {
    pub fn compare(
        id: impl Into<String>,
        params: BTreeMap<String, String>,
        n: Option<u64>,
        lhs: String,
        rhs: String,
    ) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        Row { id: id.into(), params, n, lhs, rhs, status, reason: None }
    }

    pub fn skipped(
        id: impl Into<String>,
        params: BTreeMap<String, String>,
        n: Option<u64>,
        reason: impl Into<String>,
    ) -> Self {
        Row {
            id: id.into(),
            params,
            n,
            lhs: String::new(),
            rhs: String::new(),
            status: Status::Skipped,
            reason: Some(reason.into()),
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(rows: &[Row]) -> Self {
        let mut s = Summary::default();
        for r in rows {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub results: Vec<Row>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, results: Vec<Row>) -> Self {
        let summary = Summary::of(&results);
        Report { suite: suite.into(), seed, results, summary }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = write!(out, "{:<7} {}", r.status.as_str(), r.id);
            if let Some(n) = r.n {
                let _ = write!(out, " n={n}");
            }
            for (k, v) in &r.params {
                let _ = write!(out, " {k}={v}");
            }
            if r.status != Status::Skipped {
                let _ = write!(out, " lhs={} rhs={}", r.lhs, r.rhs);
            }
            if let Some(reason) = &r.reason {
                let _ = write!(out, " ({reason})");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{}: {} pass, {} fail, {} skipped (seed {})",
            self.suite, self.summary.pass, self.summary.fail, self.summary.skipped, self.seed
        );
        out
    }
}
