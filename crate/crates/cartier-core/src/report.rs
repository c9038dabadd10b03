//! Pass/fail ledger for identity checks, with an explicit witness tensor
//! (the difference LHS − RHS) retained for every failed check.

use std::fmt;

use serde::Serialize;

use crate::tensor::{TensorData, TensorElement};

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    /// Human-readable statement of the identity being checked.
    pub name: String,
    /// Short stable code for the axiom, e.g. "qtqb2" or "pC1".
    pub tag: String,
    pub passed: bool,
    /// `LHS − RHS` of the first failing instance; `None` iff the check passed.
    pub witness: Option<TensorData>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    /// Records a residual-style check: zero residual means the identity held.
    pub fn record_residual(&mut self, tag: &str, name: &str, residual: Option<TensorElement>) {
        let witness = residual.filter(|t| !t.is_zero());
        self.entries.push(CheckEntry {
            name: name.to_string(),
            tag: tag.to_string(),
            passed: witness.is_none(),
            witness: witness.map(|t| t.to_data()),
        });
    }

    /// Records a boolean check with no tensor witness available.
    pub fn record_bool(&mut self, tag: &str, name: &str, passed: bool) {
        self.entries.push(CheckEntry {
            name: name.to_string(),
            tag: tag.to_string(),
            passed,
            witness: None,
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failed_tags(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| !e.passed)
            .map(|e| e.tag.as_str())
            .collect()
    }

    pub fn entry(&self, tag: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.tag == tag)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            let status = if entry.passed { "ok  " } else { "FAIL" };
            writeln!(f, "[{status}] {:<12} {}", entry.tag, entry.name)?;
        }
        let failed = self.entries.iter().filter(|e| !e.passed).count();
        write!(
            f,
            "{} checks, {} failed",
            self.entries.len(),
            failed
        )
    }
}
