//! JSON input, command dispatch and reports for the `ydforge` tool.

pub mod commands;
pub mod export;
pub mod input;
pub mod report;

pub use commands::{axiom_report, run_command, Command, CommandError, Options};
pub use input::{parse_input, InputDocument, InputError};
pub use report::{CliReport, Verdict};

/// Exit status for a passing report.
pub const EXIT_PASS: i32 = 0;
/// Exit status for a report with a failed finding.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for unreadable or invalid input and bad arguments.
pub const EXIT_INPUT: i32 = 2;

/// Merges per-file reports, prefixing every subject with the file label.
pub fn combine(command: &str, parts: Vec<(String, CliReport)>) -> CliReport {
    let (mut findings, mut skipped, mut artifacts) = (Vec::new(), Vec::new(), Vec::new());
    for (label, r) in parts {
        findings.extend(r.findings.into_iter().map(|mut f| {
            f.subject = format!("{label}:{}", f.subject);
            f
        }));
        skipped.extend(r.skipped.into_iter().map(|mut s| {
            s.subject = format!("{label}:{}", s.subject);
            s
        }));
        artifacts.extend(r.artifacts.into_iter().map(|mut a| {
            a.subject = format!("{label}:{}", a.subject);
            a
        }));
    }
    CliReport::new(command, findings, skipped, artifacts)
}

pub fn exit_code(r: &CliReport) -> i32 {
    match r.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::NotApplicable => EXIT_INPUT,
    }
}
