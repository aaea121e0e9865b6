//! Machine-readable reports and their rendering.
//!
//! Every subcommand produces one [`Report`]; `--format json` serializes it
//! verbatim (field order is fixed, so parse/re-serialize round-trips
//! byte-identically), `--format table` renders the same data for humans.

use serde::Serialize;
use serde_json::{Map, Value};

/// Pass/fail state of one named check. Skips are always explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    /// The check ran and held.
    Pass,
    /// The check ran and failed.
    Fail,
    /// The check could not run (e.g. no table ingested).
    Skipped,
}

/// One named check with its outcome.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    /// Stable check name.
    pub name: String,
    /// Outcome.
    pub status: CheckStatus,
    /// Human-readable evidence.
    pub details: String,
}

impl Check {
    /// A check that ran, with the outcome given.
    pub fn result(name: &str, pass: bool, details: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: if pass {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            details: details.into(),
        }
    }

    /// An explicitly skipped check.
    pub fn skipped(name: &str, details: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            details: details.into(),
        }
    }
}

/// The uniform output of every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// Subcommand name.
    pub command: String,
    /// Invocation parameters.
    pub parameters: Map<String, Value>,
    /// Structured results.
    pub results: Value,
    /// Named checks; exit code 0 requires all of them to pass.
    pub checks: Vec<Check>,
}

impl Report {
    /// Build a report.
    pub fn new(command: &str, parameters: Map<String, Value>, results: Value) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            results,
            checks: Vec::new(),
        }
    }

    /// Append a check.
    pub fn push_check(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Whether any check failed outright.
    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    /// Whether any check was skipped.
    pub fn has_skip(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Skipped)
    }

    /// Canonical JSON rendering.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        out.push('\n');
        out
    }

    /// Human-readable rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if !self.parameters.is_empty() {
            let params: Vec<String> = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{k} = {v}"))
                .collect();
            out.push_str(&format!("parameters: {}\n", params.join(", ")));
        }
        render_value(&mut out, &self.results, 0);
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                let status = match c.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "SKIPPED",
                };
                out.push_str(&format!("  {status:7} {}  {}\n", c.name, c.details));
            }
        }
        out
    }
}

fn is_scalar_array(values: &[Value]) -> bool {
    values
        .iter()
        .all(|v| !matches!(v, Value::Object(_) | Value::Array(_)))
}

fn render_value(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(out, v, indent + 1);
                    }
                    Value::Array(items) if !is_scalar_array(items) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(out, v, indent + 1);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", compact(v))),
                }
            }
        }
        Value::Array(items) => {
            if is_scalar_array(items) {
                out.push_str(&format!("{pad}{}\n", compact(value)));
            } else {
                for item in items {
                    out.push_str(&format!("{pad}-\n"));
                    render_value(out, item, indent + 1);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", compact(other))),
    }
}

fn compact(value: &Value) -> String {
    serde_json::to_string(value).expect("value serialization cannot fail")
}
