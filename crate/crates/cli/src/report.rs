//! Command results in text and JSON form.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dim: usize,
    pub nakayama: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub algebra: AlgebraSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    /// Row-major integer matrix.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
    /// A matrix with non-integral entries, written as `p/q` strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    /// An algebra file produced by the command.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra_file: Option<String>,
}

impl Report {
    pub fn new(command: &str, algebra: AlgebraSummary) -> Self {
        Self {
            command: command.to_string(),
            algebra,
            verdict: None,
            matrix: None,
            rational_matrix: None,
            checks: None,
            details: Vec::new(),
            algebra_file: None,
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().flatten().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn write_rows<T: ToString>(out: &mut String, rows: &[Vec<T>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
}

/// Text reports are line oriented; a command that produces an algebra file
/// prints just that file so the output can be parsed again.
pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            if let Some(file) = &report.algebra_file {
                return file.clone();
            }
            let mut out = String::new();
            let a = &report.algebra;
            let _ = writeln!(out, "command: {}", report.command);
            let _ = writeln!(
                out,
                "algebra: {} (dim {}, {})",
                a.name,
                a.dim,
                if a.nakayama {
                    "Nakayama"
                } else {
                    "not Nakayama"
                }
            );
            if let Some(v) = &report.verdict {
                let _ = writeln!(out, "verdict: {v}");
            }
            if let Some(m) = &report.matrix {
                out.push_str("matrix:\n");
                write_rows(&mut out, m);
            }
            if let Some(m) = &report.rational_matrix {
                out.push_str("matrix:\n");
                write_rows(&mut out, m);
            }
            for d in &report.details {
                let _ = writeln!(out, "{d}");
            }
            if let Some(checks) = &report.checks {
                let passed = checks.iter().filter(|c| c.pass).count();
                for c in checks {
                    let _ = writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
                }
                let _ = writeln!(out, "checks: {passed} of {} passed", checks.len());
            }
            out
        }
    }
}
