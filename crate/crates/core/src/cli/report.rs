use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Output of one command on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub digest: String,
    pub values: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: impl Into<String>, instance: impl Into<String>, digest: String) -> Self {
        Self {
            command: command.into(),
            instance: instance.into(),
            digest,
            values: BTreeMap::new(),
            checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("report values serialize");
        self.values.insert(key.to_string(), v);
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Key-sorted JSON without timing, so equal inputs give equal bytes.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {} ({})", self.command, self.instance, &self.digest[..12]).unwrap();
        for (k, v) in &self.values {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(out, "  [{mark}] {}: {d}", c.name).unwrap(),
                None => writeln!(out, "  [{mark}] {}", c.name).unwrap(),
            }
        }
        writeln!(out, "  time: {} ms", self.elapsed.as_millis()).unwrap();
        out
    }
}
