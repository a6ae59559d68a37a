//! Library half of the `charsheaf` tool: scenario documents, report
//! assembly and the subcommands.

pub mod commands;
pub mod document;

use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] charsheaf_core::Error),
}

/// Wraps command results with the echo of the command and its inputs.
pub fn envelope(command: &str, inputs: Value, results: Value) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "conventions": commands::conventions(),
    })
}

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
