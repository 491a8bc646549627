//! Command reports: a JSON object with fixed top-level keys, or plain text.

use std::time::Duration;

use serde_json::{json, Map, Value};

/// Output format of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub diagnostics: Map<String, Value>,
    /// Human-readable lines for text output.
    pub lines: Vec<String>,
    /// True when a sweep or cross-check found a disagreement.
    pub disagreement: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn diagnostic(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.diagnostics.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    /// `elapsed` of `None` writes `"timing": null`, which makes reports of
    /// identical runs byte-identical.
    pub fn render(&self, format: Format, elapsed: Option<Duration>) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                if let Some(d) = elapsed {
                    out.push_str(&format!("elapsed: {:.3}s\n", d.as_secs_f64()));
                }
                out
            }
            Format::Json => {
                let timing = match elapsed {
                    Some(d) => json!({ "elapsed_ms": d.as_millis() as u64 }),
                    None => Value::Null,
                };
                let report = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "results": self.results,
                    "diagnostics": self.diagnostics,
                    "timing": timing,
                });
                let mut s = serde_json::to_string_pretty(&report).expect("reports are plain JSON");
                s.push('\n');
                s
            }
        }
    }
}

/// A member set as text: `{0, 2, 4}`.
pub fn set(members: &[u32]) -> String {
    let parts: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
