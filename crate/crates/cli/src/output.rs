//! Output envelope and error-to-exit-code mapping.
//!
//! Exit codes: 0 success, 2 input error, 3 computational diagnostic
//! (for example a ball too small to witness every class).

use std::fmt;
use std::path::Path;

use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    /// Unparseable or invalid input; exit code 2.
    Input(String),
    /// The computation itself reported a diagnostic; exit code 3.
    Diagnostic(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Diagnostic(m) => write!(f, "{m}"),
        }
    }
}

pub fn input_err(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Rejects non-positive or runaway ball radii before they hit enumeration.
pub fn check_radius(name: &str, value: i64) -> Result<i64, CliError> {
    if (1..=200).contains(&value) {
        Ok(value)
    } else {
        Err(CliError::Input(format!(
            "{name} must be between 1 and 200, got {value}"
        )))
    }
}

/// The result of one command: JSON pieces for the envelope, a human
/// rendering, and optionally a CSV table.
pub struct CommandOutput {
    command: String,
    inputs: Value,
    result: Value,
    human: String,
    csv: Option<String>,
}

impl CommandOutput {
    pub fn new(
        command: impl Into<String>,
        inputs: Value,
        result: Value,
        human: impl Into<String>,
    ) -> Self {
        CommandOutput {
            command: command.into(),
            inputs,
            result,
            human: human.into(),
            csv: None,
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn human(&self) -> &str {
        &self.human
    }

    pub fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn envelope_json(&self) -> String {
        serde_json::to_string_pretty(&self.envelope()).expect("envelope serializes")
    }

    pub fn write_to(&self, path: &Path) -> Result<(), CliError> {
        let is_csv = path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        let body = if is_csv {
            self.csv
                .clone()
                .ok_or_else(|| {
                    CliError::Input(format!(
                        "CSV output is only available for table-producing commands, not `{}`",
                        self.command
                    ))
                })?
        } else {
            self.envelope_json()
        };
        std::fs::write(path, body)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
    }
}
