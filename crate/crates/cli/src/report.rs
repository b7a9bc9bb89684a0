//! Report assembly and the three output formats.

use std::fmt::Write as _;

use galext_core::contraction::experiments::ConvergenceReport;
use galext_core::enveloping::CentralizerBasis;
use galext_core::rational::{format_rational, rational_to_f64};
use galext_core::Rational;
use num_traits::Zero;
use serde::Serialize;

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Largest defect seen; `0` for exact checks that hold.
    pub defect: f64,
    /// Exact defect as `p/q`, for checks run in rational arithmetic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_defect: Option<String>,
    pub pass: bool,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn exact(name: impl Into<String>, defect: &Rational, seed: u64) -> Self {
        Self {
            name: name.into(),
            defect: rational_to_f64(defect).abs(),
            exact_defect: Some(format_rational(defect)),
            pass: defect.is_zero(),
            seed,
            note: None,
        }
    }

    pub fn float(name: impl Into<String>, defect: f64, tolerance: f64, seed: u64) -> Self {
        Self { name: name.into(), defect, exact_defect: None, pass: defect < tolerance, seed, note: None }
    }

    pub fn flag(name: impl Into<String>, pass: bool, seed: u64) -> Self {
        Self { name: name.into(), defect: if pass { 0.0 } else { 1.0 }, exact_defect: None, pass, seed, note: None }
    }

    /// A check whose hypothesis does not hold for this configuration; it
    /// counts as passing and carries the reason.
    pub fn skipped(name: impl Into<String>, note: impl Into<String>, seed: u64) -> Self {
        Self { name: name.into(), defect: 0.0, exact_defect: None, pass: true, seed, note: Some(note.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralizerSummary {
    pub max_degree: u32,
    pub dimension: usize,
    pub basis: Vec<String>,
}

impl From<&CentralizerBasis> for CentralizerSummary {
    fn from(b: &CentralizerBasis) -> Self {
        Self { max_degree: b.max_degree, dimension: b.dimension(), basis: b.elements.iter().map(|p| p.to_string()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub sample: usize,
    pub seed: u64,
    #[serde(flatten)]
    pub report: ConvergenceReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub config: serde_json::Value,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip)]
    params: String,
    #[serde(skip)]
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centralizer: Option<CentralizerSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub convergence: Vec<ConvergenceRow>,
}

impl Report {
    pub fn new(command: &str, config: &RunConfig) -> Self {
        let value = serde_json::to_value(config).expect("config serializes");
        Self::with_config(command, value, config.params.to_string(), config.seed)
    }

    pub fn with_config(command: &str, config: serde_json::Value, params: String, seed: u64) -> Self {
        Self {
            command: command.to_string(),
            config,
            params,
            seed,
            checks: Vec::new(),
            pass: true,
            centralizer: None,
            convergence: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    /// Appends the checks and data of another report.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
        if other.centralizer.is_some() {
            self.centralizer = other.centralizer;
        }
        self.convergence.extend(other.convergence);
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Json => Ok(serde_json::to_string_pretty(self).map_err(galext_core::Error::from)? + "\n"),
            OutputFormat::Csv => self.csv(),
            OutputFormat::Human => Ok(self.human()),
        }
    }

    /// Convergence data when present (`c, error, zeta_magnitude` per grid
    /// point), otherwise one row per check.
    fn csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.convergence.is_empty() {
            w.write_record(["name", "seed", "params", "defect", "pass"])?;
            for c in &self.checks {
                w.write_record([
                    c.name.clone(),
                    c.seed.to_string(),
                    self.params.clone(),
                    c.exact_defect.clone().unwrap_or_else(|| c.defect.to_string()),
                    c.pass.to_string(),
                ])?;
            }
        } else {
            w.write_record(["experiment", "sample", "seed", "c", "measured", "target", "error", "zeta_magnitude"])?;
            for row in &self.convergence {
                let r = &row.report;
                for i in 0..r.c_grid.len() {
                    w.write_record([
                        r.experiment.clone(),
                        row.sample.to_string(),
                        row.seed.to_string(),
                        r.c_grid[i].to_string(),
                        r.measured[i].to_string(),
                        r.target.to_string(),
                        r.errors[i].to_string(),
                        r.zeta_magnitudes[i].to_string(),
                    ])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} ({}, seed {})", self.command, self.params, self.seed);
        for c in &self.checks {
            let status = if c.pass { "ok  " } else { "FAIL" };
            let defect = c.exact_defect.clone().unwrap_or_else(|| format!("{:.3e}", c.defect));
            let _ = write!(s, "  [{status}] {:<48} defect {defect}", c.name);
            if let Some(n) = &c.note {
                let _ = write!(s, "  ({n})");
            }
            s.push('\n');
        }
        if let Some(z) = &self.centralizer {
            let _ = writeln!(s, "  centralizer up to degree {}: dimension {}", z.max_degree, z.dimension);
            for b in &z.basis {
                let _ = writeln!(s, "    {b}");
            }
        }
        let _ = writeln!(s, "{}", if self.pass { "PASS" } else { "FAIL" });
        s
    }
}
