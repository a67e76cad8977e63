//! Machine-readable run report and its human summary.

use std::fmt;

use courant_core::check::PropertyOutcome;
use serde::Serialize;

use crate::config::SuiteConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub id: String,
    pub module: String,
    /// Family of the structure the suite ran on.
    pub structure: String,
    /// Splitting and frame the normal forms use.
    pub splitting: String,
    pub passed: bool,
    pub properties: Vec<PropertyOutcome>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: SuiteConfig,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(config: SuiteConfig, suites: Vec<SuiteReport>) -> Self {
        let passed = suites.iter().all(|s| s.passed);
        VerificationReport { schema_version: SCHEMA_VERSION, config, suites, passed }
    }

    /// Pretty JSON; identical runs give identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn property_count(&self) -> usize {
        self.suites.iter().map(|s| s.properties.len()).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = (&SuiteReport, &PropertyOutcome)> {
        self.suites.iter().flat_map(|s| s.properties.iter().filter(|p| !p.passed).map(move |p| (s, p)))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.config)?;
        for s in &self.suites {
            let ok = s.properties.iter().filter(|p| p.passed).count();
            let mark = if s.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {:<16} {:>3}/{:<3} [{}]", s.id, ok, s.properties.len(), s.module)?;
        }
        for (s, p) in self.failures() {
            writeln!(f, "  {}::{} ({})", s.id, p.name, p.anchor)?;
            if let Some(c) = &p.counterexample {
                for v in &c.inputs {
                    writeln!(f, "    {} = {}", v.name, v.value)?;
                }
                writeln!(f, "    lhs: {}", c.lhs)?;
                writeln!(f, "    rhs: {}", c.rhs)?;
            }
        }
        let verdict = if self.passed { "PASSED" } else { "FAILED" };
        write!(f, "{verdict}: {} suites, {} properties", self.suites.len(), self.property_count())
    }
}
