//! Command reports and their JSON and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use ydforge_core::{Finding, Matrix};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub basis_tuple: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FindingOut {
    pub subject: String,
    pub check: String,
    pub anchor: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&Finding> for FindingOut {
    fn from(f: &Finding) -> Self {
        FindingOut {
            subject: f.subject.clone(),
            check: f.check.clone(),
            anchor: f.anchor.clone(),
            ok: f.ok,
            witness: f.witness.as_ref().map(|w| WitnessOut {
                basis_tuple: w.basis_tuple.clone(),
                lhs: w.lhs.clone(),
                rhs: w.rhs.clone(),
            }),
            note: f.note.clone(),
        }
    }
}

/// A check that was not run, with the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub subject: String,
    pub reason: String,
}

/// A computed object attached to the report, such as a braid matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Artifact {
    pub subject: String,
    pub name: String,
    pub value: serde_json::Value,
}

impl Artifact {
    pub fn matrix(subject: &str, name: &str, m: &Matrix) -> Self {
        let rows: Vec<Vec<String>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(ToString::to_string).collect())
            .collect();
        Artifact {
            subject: subject.to_string(),
            name: name.to_string(),
            value: serde_json::json!(rows),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliReport {
    pub report_version: u32,
    pub command: String,
    pub verdict: Verdict,
    pub findings: Vec<FindingOut>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub artifacts: Vec<Artifact>,
}

impl CliReport {
    /// Sorts findings by subject then check name (stable, so repeated
    /// checks keep their order) and derives the verdict.
    pub fn new(
        command: &str,
        mut findings: Vec<FindingOut>,
        mut skipped: Vec<Skipped>,
        mut artifacts: Vec<Artifact>,
    ) -> Self {
        findings.sort_by(|a, b| (&a.subject, &a.check).cmp(&(&b.subject, &b.check)));
        skipped.sort_by(|a, b| a.subject.cmp(&b.subject));
        artifacts.sort_by(|a, b| (&a.subject, &a.name).cmp(&(&b.subject, &b.name)));
        let verdict = if findings.is_empty() {
            Verdict::NotApplicable
        } else if findings.iter().all(|f| f.ok) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CliReport {
            report_version: REPORT_VERSION,
            command: command.to_string(),
            verdict,
            findings,
            skipped,
            artifacts,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &FindingOut> {
        self.findings.iter().filter(|f| !f.ok)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.findings {
            let mark = if f.ok { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {}: {}  ({})", f.subject, f.check, f.anchor);
            if let Some(w) = &f.witness {
                let tuple: Vec<String> = w.basis_tuple.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "       at basis ({}): lhs [{}] rhs [{}]",
                    tuple.join(", "),
                    w.lhs.join(", "),
                    w.rhs.join(", ")
                );
            }
            if let Some(n) = &f.note {
                let _ = writeln!(out, "       note: {n}");
            }
        }
        for s in &self.skipped {
            let _ = writeln!(out, "[skip] {}: {}", s.subject, s.reason);
        }
        for a in &self.artifacts {
            let _ = writeln!(out, "[data] {}: {} = {}", a.subject, a.name, a.value);
        }
        let failed = self.failures().count();
        let verdict = serde_json::to_value(self.verdict).expect("enum serializes");
        let _ = writeln!(
            out,
            "{}: {} ({} findings, {} failed, {} skipped)",
            self.command,
            verdict.as_str().unwrap_or_default(),
            self.findings.len(),
            failed,
            self.skipped.len()
        );
        out
    }
}
