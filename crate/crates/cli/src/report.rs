//! Verification reports. Reports never contain timings, so two runs with
//! the same seed print the same bytes.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Refuted,
    NotCertified,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Certified => 0,
            _ => 1,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::Refuted => "refuted",
            Verdict::NotCertified => "not-certified",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotCertified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Concrete indices and values; always present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            detail: None,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            detail: None,
            witness: Some(witness.into()),
        }
    }

    pub fn not_certified(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::NotCertified,
            detail: Some(detail.into()),
            witness: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// An exact matrix backing a certified claim, with its checked inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
    pub inverse: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub verdict: Verdict,
    pub seed: u64,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
}

impl Report {
    /// Verdict from the checks: any failure refutes, any uncertified check
    /// leaves the whole report uncertified.
    pub fn new(command: &str, subject: &str, seed: u64, checks: Vec<Check>) -> Self {
        let verdict = if checks.iter().any(|c| c.status == Status::Fail) {
            Verdict::Refuted
        } else if checks.iter().any(|c| c.status == Status::NotCertified) || checks.is_empty() {
            Verdict::NotCertified
        } else {
            Verdict::Certified
        };
        Report {
            command: command.into(),
            subject: subject.into(),
            verdict,
            seed,
            checks,
            certificates: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}: {}", self.command, self.subject, self.verdict.label());
        let _ = writeln!(s, "seed: {}", self.seed);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotCertified => "not certified",
            };
            let _ = write!(s, "[{tag}] {}", c.name);
            if let Some(d) = &c.detail {
                let _ = write!(s, " ({d})");
            }
            s.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "    witness: {w}");
            }
        }
        for cert in &self.certificates {
            let rows = cert.matrix.len();
            let cols = cert.matrix.first().map_or(0, Vec::len);
            let _ = writeln!(s, "certificate {}: {rows}x{cols} matrix with exact inverse", cert.name);
        }
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
