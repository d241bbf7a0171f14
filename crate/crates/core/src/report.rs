//! Verification reports shared by every axiom checker.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Violations kept verbatim; the full count is always in `counts`.
pub const MAX_LISTED_VIOLATIONS: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub axiom: String,
    pub pass: bool,
    pub violations: Vec<String>,
    pub counts: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(axiom: impl Into<String>) -> Self {
        Report {
            axiom: axiom.into(),
            pass: true,
            violations: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    pub fn violation(&mut self, msg: impl Into<String>) {
        self.pass = false;
        *self.counts.entry("violations".into()).or_insert(0) += 1;
        if self.violations.len() < MAX_LISTED_VIOLATIONS {
            self.violations.push(msg.into());
        }
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.into(), value);
    }

    pub fn bump(&mut self, key: &str) {
        *self.counts.entry(key.into()).or_insert(0) += 1;
    }

    pub fn get(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// Folds another report's violations into this one.
    pub fn absorb(&mut self, other: Report) {
        let extra = other.get("violations");
        if !other.pass {
            self.pass = false;
        }
        for v in other.violations {
            if self.violations.len() < MAX_LISTED_VIOLATIONS {
                self.violations.push(format!("{}: {v}", other.axiom));
            }
        }
        if extra > 0 {
            *self.counts.entry("violations".into()).or_insert(0) += extra;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
