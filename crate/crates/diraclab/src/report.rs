//! Verification results and their renderings.

use std::fmt::Write as _;

use serde::Serialize;

/// How a residual is compared with its tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Pass when `residual <= tolerance`.
    AtMost,
    /// Pass when `residual > tolerance`; used where an identity must fail.
    Exceeds,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    /// The physical statement the check exercises.
    pub anchor: String,
    pub residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub pass: bool,
    /// Set when the check could not be evaluated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Check {
    pub fn new(
        suite: &str,
        name: &str,
        anchor: &str,
        residual: f64,
        tolerance: f64,
        bound: Bound,
    ) -> Self {
        let pass = match bound {
            Bound::AtMost => residual <= tolerance,
            Bound::Exceeds => residual > tolerance,
        };
        Check {
            suite: suite.to_string(),
            name: name.to_string(),
            anchor: anchor.to_string(),
            residual,
            tolerance,
            bound,
            pass,
            error: None,
        }
    }

    pub fn failed(suite: &str, name: &str, anchor: &str, tolerance: f64, error: String) -> Self {
        Check {
            suite: suite.to_string(),
            name: name.to_string(),
            anchor: anchor.to_string(),
            residual: f64::NAN,
            tolerance,
            bound: Bound::AtMost,
            pass: false,
            error: Some(error),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub pass: bool,
}

/// `{:.3e}` with `nan` spelled out, so the text is stable across platforms.
fn sci(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.3e}")
    }
}

impl VerificationReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        };
        VerificationReport {
            pass: summary.failed == 0,
            checks,
            summary,
        }
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut suite = "";
        for c in &self.checks {
            if c.suite != suite {
                suite = &c.suite;
                let _ = writeln!(out, "== {suite}");
            }
            let cmp = match c.bound {
                Bound::AtMost => "<=",
                Bound::Exceeds => ">",
            };
            let _ = write!(
                out,
                "{} {}  residual {} {} {}  [{}]",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                sci(c.residual),
                cmp,
                sci(c.tolerance),
                c.anchor
            );
            if let Some(e) = &c.error {
                let _ = write!(out, "  error: {e}");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} of {} checks passed, {} failed: {}",
            self.summary.passed,
            self.summary.total,
            self.summary.failed,
            if self.pass { "PASS" } else { "FAIL" }
        );
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
