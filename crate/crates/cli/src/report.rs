//! Deterministic JSON reports: sorted keys, stable entry order, an input
//! digest, and an exit code derived from the entry statuses.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Skipped because the enumeration cap was exceeded; maps to exit 3.
    SkipCap,
    /// Skipped for a benign reason (e.g. enumeration over the rationals).
    Skip,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkipCap | Status::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckEntry {
    pub id: String,
    pub status: Status,
    pub data: Value,
    pub citation: Option<String>,
}

impl CheckEntry {
    pub fn new(id: impl Into<String>, status: Status, data: Value) -> Self {
        CheckEntry { id: id.into(), status, data, citation: None }
    }

    pub fn with_citation(mut self, citation: impl Into<String>) -> Self {
        self.citation = Some(citation.into());
        self
    }

    /// verify-paper entries key the identifier as "scenario".
    fn to_json(&self, id_key: &str) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert(id_key.to_string(), json!(self.id));
        obj.insert("status".to_string(), json!(self.status.as_str()));
        obj.insert("data".to_string(), self.data.clone());
        if let Some(c) = &self.citation {
            obj.insert("citation".to_string(), json!(c));
        }
        Value::Object(obj)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub input_digest: String,
    pub checks: Vec<CheckEntry>,
    /// "id" for ordinary commands, "scenario" for verify-paper.
    pub id_key: &'static str,
}

impl Report {
    pub fn new(input: &[u8], id_key: &'static str) -> Self {
        Report {
            input_digest: digest(input),
            checks: Vec::new(),
            id_key,
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.checks.push(entry);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.checks.iter().map(|c| c.to_json(self.id_key)).collect::<Vec<_>>(),
            "input_digest": self.input_digest,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn print_json(&self) {
        println!("{}", serde_json::to_string_pretty(&self.to_json()).expect("serializable"));
    }

    pub fn print_text(&self) {
        for c in &self.checks {
            println!("{:4}  {}", c.status.as_str(), c.id);
            if c.status != Status::Pass {
                if let Some(obj) = c.data.as_object() {
                    for (k, v) in obj {
                        println!("        {k}: {v}");
                    }
                }
            }
        }
    }

    /// 0 all pass, 1 any failure, 3 cap-limited skip (failures dominate).
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().any(|c| c.status == Status::SkipCap) {
            3
        } else {
            0
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}
