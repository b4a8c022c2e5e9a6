//! Report rendering: readable text, or `key<TAB>value` lines for machines.

use std::fmt::Write as _;

use loopoid::{CheckReport, StructureTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

/// Ordered key/value pairs; text output aligns them, machine output tabs them.
#[derive(Debug, Default)]
pub struct Doc {
    entries: Vec<(String, String)>,
}

impl Doc {
    pub fn new() -> Self {
        Doc::default()
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn report(&mut self, g: &StructureTable, report: &CheckReport) -> &mut Self {
        self.put("result", verdict(report.passed()));
        for (axiom, ok) in &report.flags {
            self.put(format!("flag.{axiom}"), verdict(*ok));
        }
        for (i, w) in report.witnesses.iter().enumerate() {
            let elements: Vec<&str> = w.elements.iter().map(|&e| g.label(e)).collect();
            self.put(format!("witness.{i}.axiom"), &w.axiom);
            self.put(format!("witness.{i}.kind"), w.kind.as_str());
            self.put(format!("witness.{i}.elements"), elements.join(","));
            self.put(format!("witness.{i}.detail"), &w.detail);
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Machine => {
                for (k, v) in &self.entries {
                    let _ = writeln!(out, "{k}\t{}", v.replace(['\t', '\n'], " "));
                }
            }
            Format::Text => {
                let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.entries {
                    let _ = writeln!(out, "{k:width$}  {v}");
                }
            }
        }
        out
    }
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}
