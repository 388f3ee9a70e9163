use std::fmt;

use crate::linalg::{decode_index, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

/// A basis tuple on which two sides of an identity disagree, with both
/// sides written out in the coordinates of the codomain basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub basis_tuple: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    pub subject: String,
    pub check: String,
    /// The identity being checked, written out in Sweedler notation.
    pub anchor: String,
    pub ok: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Compares two maps with domain `dims`; on mismatch the first differing
    /// column is decoded into a basis tuple.
    pub fn check_maps(
        &mut self,
        check: &str,
        anchor: &str,
        lhs: &Matrix,
        rhs: &Matrix,
        dims: &[usize],
    ) -> bool {
        assert_eq!(
            lhs.shape(),
            rhs.shape(),
            "{check}: sides have different shapes"
        );
        let bad =
            (0..lhs.cols()).find(|&c| (0..lhs.rows()).any(|r| lhs.get(r, c) != rhs.get(r, c)));
        let witness = bad.map(|c| Witness {
            basis_tuple: decode_index(c, dims),
            lhs: lhs.column(c).iter().map(ToString::to_string).collect(),
            rhs: rhs.column(c).iter().map(ToString::to_string).collect(),
        });
        self.push(Finding {
            subject: String::new(),
            check: check.to_string(),
            anchor: anchor.to_string(),
            ok: witness.is_none(),
            witness,
            note: None,
        })
    }

    pub fn check_true(
        &mut self,
        check: &str,
        anchor: &str,
        ok: bool,
        note: Option<String>,
    ) -> bool {
        self.push(Finding {
            subject: String::new(),
            check: check.to_string(),
            anchor: anchor.to_string(),
            ok,
            witness: None,
            note,
        })
    }

    fn push(&mut self, f: Finding) -> bool {
        let ok = f.ok;
        self.findings.push(f);
        ok
    }

    pub fn merge(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }

    /// Merges `other` with each check name prefixed by `prefix: `.
    pub fn merge_prefixed(&mut self, prefix: &str, other: Report) {
        for mut f in other.findings {
            f.check = format!("{prefix}: {}", f.check);
            self.findings.push(f);
        }
    }

    pub fn is_ok(&self) -> bool {
        self.findings.iter().all(|f| f.ok)
    }

    pub fn verdict(&self) -> Verdict {
        if self.is_ok() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| !f.ok)
    }

    pub fn first_failure(&self) -> Option<&Finding> {
        self.failures().next()
    }

    pub fn failed(&self, check: &str) -> bool {
        self.failures()
            .any(|f| f.check == check || f.check.ends_with(&format!(": {check}")))
    }

    pub fn set_subject(&mut self, subject: &str) {
        for f in &mut self.findings {
            f.subject = subject.to_string();
        }
    }
}
