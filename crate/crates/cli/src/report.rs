//! Check reports: human text plus a machine payload with stable key order.

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug)]
pub struct CheckReport {
    pub check: &'static str,
    pub pass: bool,
    pub lines: Vec<String>,
    pub payload: Value,
}

impl CheckReport {
    pub fn new(check: &'static str) -> Self {
        Self {
            check,
            pass: true,
            lines: Vec::new(),
            payload: Value::Null,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn assert(&mut self, ok: bool, what: &str) {
        if ok {
            self.lines.push(format!("ok: {what}"));
        } else {
            self.lines.push(format!("FAILED: {what}"));
            self.pass = false;
        }
    }

    /// Render for the chosen format. Machine payloads serialize with
    /// alphabetically ordered keys, so byte-identical inputs yield
    /// byte-identical reports.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                out.push_str(&format!(
                    "{}: {}\n",
                    self.check,
                    if self.pass { "PASS" } else { "FAIL" }
                ));
                out
            }
            Format::Machine => {
                let wrapped = serde_json::json!({
                    "check": self.check,
                    "pass": self.pass,
                    "report": self.payload,
                });
                let mut s = serde_json::to_string_pretty(&wrapped).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}
