//! Check records and sweep reports with JSON, CSV, and text renderings.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Outcome of one check. `Info` marks a check that was recorded but not
/// asserted, with the reason in `computed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Info => "info",
        };
        f.write_str(s)
    }
}

/// One verified claim: what was expected, what was computed, how it went.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    pub expected: String,
    pub computed: String,
    pub status: CheckStatus,
    pub elapsed_ms: u128,
}

impl CheckRecord {
    pub fn new(
        claim: impl Into<String>,
        partition: Option<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        status: CheckStatus,
        elapsed_ms: u128,
    ) -> CheckRecord {
        CheckRecord {
            claim: claim.into(),
            partition,
            expected: expected.into(),
            computed: computed.into(),
            status,
            elapsed_ms,
        }
    }
}

/// A full run: every check record plus the provenance needed to reproduce it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub tool_version: String,
    pub n_range: [usize; 2],
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

impl SweepReport {
    pub fn new(n_range: [usize; 2], seed: u64) -> SweepReport {
        SweepReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            n_range,
            seed,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut info = 0;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::Info => info += 1,
            }
        }
        (pass, fail, info)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<SweepReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "sweep report JSON".into(),
            detail: e.to_string(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("claim,partition,expected,computed,status,elapsed_ms\n");
        for c in &self.checks {
            let fields = [
                c.claim.as_str(),
                c.partition.as_deref().unwrap_or(""),
                c.expected.as_str(),
                c.computed.as_str(),
            ];
            for field in fields {
                out.push_str(&csv_escape(field));
                out.push(',');
            }
            out.push_str(&c.status.to_string());
            out.push(',');
            out.push_str(&c.elapsed_ms.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "immanant v{} n={}..={} seed={}\n",
            self.tool_version, self.n_range[0], self.n_range[1], self.seed
        ));
        for c in &self.checks {
            let scope = c.partition.as_deref().unwrap_or("-");
            out.push_str(&format!(
                "[{}] {} {} expected={} computed={} ({} ms)\n",
                c.status, c.claim, scope, c.expected, c.computed, c.elapsed_ms
            ));
        }
        let (pass, fail, info) = self.counts();
        out.push_str(&format!("{pass} passed, {fail} failed, {info} info\n"));
        out
    }

    pub fn save_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SweepReport {
        let mut report = SweepReport::new([2, 5], 0);
        report.push(CheckRecord::new(
            "table-valid",
            None,
            "all invariants hold",
            "all invariants hold",
            CheckStatus::Pass,
            12,
        ));
        report.push(CheckRecord::new(
            "gset-order",
            Some("2,1".into()),
            "3",
            "4",
            CheckStatus::Fail,
            3,
        ));
        report.push(CheckRecord::new(
            "long-cycle-tau",
            Some("3,1,1,1".into()),
            "excluded",
            "no qualifying cycle type, by design",
            CheckStatus::Info,
            0,
        ));
        report
    }

    #[test]
    fn failure_detection_and_counts() {
        let report = sample();
        assert!(report.failed());
        assert_eq!(report.counts(), (1, 1, 1));
        let mut clean = SweepReport::new([2, 2], 7);
        assert!(!clean.failed());
        clean.push(CheckRecord::new("x", None, "1", "1", CheckStatus::Info, 0));
        assert!(!clean.failed());
    }

    #[test]
    fn json_round_trip() {
        let report = sample();
        let back = SweepReport::from_json(&report.to_json()).unwrap();
        assert_eq!(back.n_range, [2, 5]);
        assert_eq!(back.seed, 0);
        assert_eq!(back.checks.len(), 3);
        assert_eq!(back.checks[1].status, CheckStatus::Fail);
        assert_eq!(back.checks[1].partition.as_deref(), Some("2,1"));
        assert!(SweepReport::from_json("not json").is_err());
    }

    #[test]
    fn status_serializes_lowercase() {
        let json = serde_json::to_string(&CheckStatus::Pass).unwrap();
        assert_eq!(json, "\"pass\"");
        let json = serde_json::to_string(&CheckStatus::Info).unwrap();
        assert_eq!(json, "\"info\"");
    }

    #[test]
    fn csv_escapes_quotes_and_commas() {
        let mut report = SweepReport::new([2, 2], 0);
        report.push(CheckRecord::new(
            "claim,with,commas",
            Some("2,1".into()),
            "say \"hi\"",
            "plain",
            CheckStatus::Pass,
            1,
        ));
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "claim,partition,expected,computed,status,elapsed_ms"
        );
        assert_eq!(
            lines.next().unwrap(),
            "\"claim,with,commas\",\"2,1\",\"say \"\"hi\"\"\",plain,pass,1"
        );
    }

    #[test]
    fn text_rendering_includes_summary() {
        let text = sample().to_text();
        assert!(text.contains("immanant v"));
        assert!(text.contains("[fail] gset-order 2,1"));
        assert!(text.ends_with("1 passed, 1 failed, 1 info\n"));
    }
}
