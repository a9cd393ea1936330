// SPDX-License-Identifier: Apache-2.0

//! Command reports, rendered as JSON or plain text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use einkahler_core::exactla::{self, Matrix, Scalar};
use einkahler_core::notation::format_algebra;
use einkahler_core::{CheckLedger, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: String,
    pub witness: String,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub algebra: String,
    pub results: Vec<Value>,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(command: impl Into<String>, algebra: Option<&LieAlgebra>) -> Self {
        Self {
            command: command.into(),
            algebra: algebra.map(format_algebra).unwrap_or_default(),
            results: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn result(&mut self, v: Value) {
        self.results.push(v);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: impl Into<String>) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: if passed { "pass" } else { "fail" }.into(),
            witness: witness.into(),
        });
    }

    /// Appends a ledger, prefixing each name with `prefix.` when nonempty.
    pub fn ledger(&mut self, prefix: &str, ledger: &CheckLedger) {
        for c in &ledger.checks {
            let name = if prefix.is_empty() {
                c.name.clone()
            } else {
                format!("{prefix}.{}", c.name)
            };
            self.check(name, c.passed, c.witness.clone());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        if !self.algebra.is_empty() {
            let _ = writeln!(out, "algebra: {}", self.algebra);
        }
        for r in &self.results {
            write_value(&mut out, r, 0);
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for c in &self.checks {
                let mark = if c.passed() { "pass" } else { "FAIL" };
                if c.witness.is_empty() {
                    let _ = writeln!(out, "  [{mark}] {}", c.name);
                } else {
                    let _ = writeln!(out, "  [{mark}] {}: {}", c.name, c.witness);
                }
            }
        }
        out
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_value(out, x, indent + 1);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for i in items {
                            let _ = writeln!(out, "{pad}  -");
                            write_value(out, i, indent + 2);
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline(x));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

pub fn q(x: &Scalar) -> Value {
    Value::String(exactla::format_scalar(x))
}

pub fn qvec(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

pub fn qmat(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| qvec(r)).collect())
}

pub fn signs(s: &[i8]) -> Value {
    json!(s)
}
