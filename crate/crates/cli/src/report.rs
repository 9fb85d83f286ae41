//! The JSON report shared by every check.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::time::Instant;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub status: Status,
    /// Failing check name to its witness; present iff `status` is not `pass`.
    pub witness: Option<Value>,
    pub checks: Vec<CheckLine>,
    pub counts: BTreeMap<String, u64>,
    pub details: Value,
    pub seed: u64,
    pub inputs: Vec<String>,
    pub input_digest: Option<String>,
    pub tool_version: String,
    pub timing_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn error(check: &str, seed: u64, inputs: Vec<String>, message: &str) -> Report {
        Report {
            check: check.to_string(),
            status: Status::Error,
            witness: Some(json!({ "error": message })),
            checks: Vec::new(),
            counts: BTreeMap::new(),
            details: Value::Null,
            seed,
            inputs,
            input_digest: None,
            tool_version: TOOL_VERSION.to_string(),
            timing_ms: 0,
        }
    }

    /// The report with `timing_ms` zeroed, the only field that varies
    /// between runs.
    pub fn without_timing(&self) -> Report {
        Report { timing_ms: 0, ..self.clone() }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}", self.status.as_str().to_uppercase(), self.check);
        if !self.counts.is_empty() {
            let c: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&format!(" [{}]", c.join(", ")));
        }
        s.push('\n');
        for c in &self.checks {
            s.push_str(&format!("  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name));
            if let Some(w) = c.witness.as_ref().filter(|_| !c.passed) {
                s.push_str(&format!(": {w}"));
            }
            s.push('\n');
        }
        if self.status == Status::Error {
            if let Some(w) = &self.witness {
                s.push_str(&format!("  error: {}\n", w["error"]));
            }
        }
        s
    }
}

/// Accumulates checks for one report.
pub struct ReportBuilder {
    check: String,
    seed: u64,
    checks: Vec<CheckLine>,
    counts: BTreeMap<String, u64>,
    details: Map<String, Value>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(check: &str, seed: u64) -> Self {
        ReportBuilder {
            check: check.to_string(),
            seed,
            checks: Vec::new(),
            counts: BTreeMap::new(),
            details: Map::new(),
            start: Instant::now(),
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, witness: Option<Value>) -> &mut Self {
        let witness = if passed { None } else { Some(witness.unwrap_or_else(|| json!("condition does not hold"))) };
        self.checks.push(CheckLine { name: name.to_string(), passed, witness });
        self
    }

    /// A check whose witness is `Some` exactly when it fails.
    pub fn witness<W: Serialize>(&mut self, name: &str, witness: Option<W>) -> &mut Self {
        let w = witness.map(|w| serde_json::to_value(w).expect("witness serializes"));
        self.check(name, w.is_none(), w)
    }

    pub fn expect_eq<T: PartialEq + Serialize>(&mut self, name: &str, got: T, expected: T) -> &mut Self {
        let ok = got == expected;
        self.check(name, ok, Some(json!({ "got": got, "expected": expected })))
    }

    pub fn count(&mut self, key: &str, value: usize) -> &mut Self {
        self.counts.insert(key.to_string(), value as u64);
        self
    }

    pub fn detail<T: Serialize>(&mut self, key: &str, value: &T) -> &mut Self {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("details serialize"));
        self
    }

    pub fn finish(&self, inputs: &[Input]) -> Report {
        let failed: Map<String, Value> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| (c.name.clone(), c.witness.clone().unwrap_or(Value::Null)))
            .collect();
        let status = if failed.is_empty() { Status::Pass } else { Status::Fail };
        Report {
            check: self.check.clone(),
            status,
            witness: (!failed.is_empty()).then_some(Value::Object(failed)),
            checks: self.checks.clone(),
            counts: self.counts.clone(),
            details: Value::Object(self.details.clone()),
            seed: self.seed,
            inputs: inputs.iter().map(|i| i.name.clone()).collect(),
            input_digest: digest(inputs),
            tool_version: TOOL_VERSION.to_string(),
            timing_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// A file read from disk, kept with the name it was given by.
#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub text: String,
}

/// `sha256:` of the inputs, each prefixed by its byte length.
pub fn digest(inputs: &[Input]) -> Option<String> {
    if inputs.is_empty() {
        return None;
    }
    let mut h = Sha256::new();
    for i in inputs {
        h.update((i.text.len() as u64).to_le_bytes());
        h.update(i.text.as_bytes());
    }
    Some(format!("sha256:{:x}", h.finalize()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_carries_witness() {
        let mut b = ReportBuilder::new("x", 0);
        b.witness("a", None::<usize>).check("b", false, None);
        let r = b.finish(&[]);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.unwrap()["b"], json!("condition does not hold"));
        assert!(r.input_digest.is_none());
    }

    #[test]
    fn digest_is_order_sensitive() {
        let a = Input { name: "a".into(), text: "1\n1\n".into() };
        let b = Input { name: "b".into(), text: "2".into() };
        assert_ne!(digest(&[a.clone(), b.clone()]), digest(&[b, a]));
    }
}
