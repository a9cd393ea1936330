// SPDX-License-Identifier: Apache-2.0

//! Named pass/fail checks with witnesses.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Empty on success; otherwise a short description of a failing instance.
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckLedger {
    pub checks: Vec<Check>,
}

impl CheckLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: &str, passed: bool, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            witness: witness.into(),
        });
    }

    /// Records `result`, using the error text as witness.
    pub fn record_result(&mut self, name: &str, result: Result<(), String>) {
        match result {
            Ok(()) => self.record(name, true, ""),
            Err(w) => self.record(name, false, w),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: CheckLedger) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for CheckLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            if c.witness.is_empty() {
                writeln!(f, "  [{status}] {}", c.name)?;
            } else {
                writeln!(f, "  [{status}] {}: {}", c.name, c.witness)?;
            }
        }
        Ok(())
    }
}
