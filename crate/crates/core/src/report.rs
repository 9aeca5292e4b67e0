//! Structured validation findings shared by all checkers.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Item(usize),
    Arc(usize),
    Edge(usize),
    Vertex(usize),
    Gap(usize),
    Segment { edge: usize, index: usize },
    Coordinate { x: String, y: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub severity: Severity,
    pub code: String,
    pub message: String,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn error(&mut self, code: &str, message: impl Into<String>, witnesses: Vec<Witness>) {
        self.findings.push(Finding {
            severity: Severity::Error,
            code: code.to_string(),
            message: message.into(),
            witnesses,
        });
    }

    pub fn info(&mut self, code: &str, message: impl Into<String>) {
        self.findings.push(Finding {
            severity: Severity::Info,
            code: code.to_string(),
            message: message.into(),
            witnesses: Vec::new(),
        });
    }

    /// True iff there is no error-severity finding.
    pub fn pass(&self) -> bool {
        self.findings.iter().all(|f| f.severity != Severity::Error)
    }

    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Error)
    }

    pub fn has_code(&self, code: &str) -> bool {
        self.errors().any(|f| f.code == code)
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.findings.extend(other.findings);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            return write!(f, "ok");
        }
        for (i, x) in self.findings.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{:?}] {}: {}", x.severity, x.code, x.message)?;
        }
        Ok(())
    }
}
