//! Verification reports shared by every check suite.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;

pub const REPORT_SCHEMA: &str = "cellorder.report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// A counterexample or the error that stopped the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(ty: impl ToString) -> Self {
        VerificationReport { schema: REPORT_SCHEMA, ty: ty.to_string(), checks: Vec::new() }
    }

    /// Runs `f`; `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`, and an
    /// error fails with its message.
    pub fn run(&mut self, name: impl ToString, f: impl FnOnce() -> Result<Option<String>>) -> bool {
        let start = Instant::now();
        let (passed, witness) = match f() {
            Ok(None) => (true, None),
            Ok(Some(w)) => (false, Some(w)),
            Err(e) => (false, Some(e.to_string())),
        };
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            witness,
            millis: Some(start.elapsed().as_millis() as u64),
        });
        passed
    }

    pub fn extend(&mut self, other: VerificationReport) {
        let prefix = if other.ty == self.ty { String::new() } else { format!("{}: ", other.ty) };
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Drops timings, leaving a report that is stable across runs.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.millis = None;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            s.push_str(&format!("{status}  {}  {}", self.ty, c.name));
            if let Some(ms) = c.millis {
                s.push_str(&format!("  ({ms} ms)"));
            }
            if let Some(w) = &c.witness {
                s.push_str(&format!("\n      {w}"));
            }
            s.push('\n');
        }
        s
    }
}
