//! Command-line driver for the verification suites of `galext-core`.
//!
//! Every command prints one report (JSON, CSV or plain text) and exits with
//! `0` when all checks pass, `1` when any check fails and `2` on a
//! configuration error.

pub mod config;
pub mod error;
pub mod report;
pub mod suites;

use std::fs;
use std::io::Write;

use galext_core::algebra_file::AlgebraFile;
use serde_json::json;

use config::{Cli, Command, CommonArgs, LoadArgs, OutputFormat, RunConfig};
use error::CliError;
use report::{Check, Report};
use suites::SuiteRegistry;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

fn run_suite(registry: &SuiteRegistry, name: &str, args: &CommonArgs) -> Result<Report, CliError> {
    let suite = registry.get(name).ok_or_else(|| CliError::Config(format!("no suite named `{name}`")))?;
    suite.run(&RunConfig::from_args(args, suite.default_samples())?)
}

/// Runs every registered suite; check names are prefixed with the suite name.
fn run_all(registry: &SuiteRegistry, args: &CommonArgs) -> Result<Report, CliError> {
    let mut configs = serde_json::Map::new();
    let mut parts = Vec::new();
    for suite in registry.iter() {
        let cfg = RunConfig::from_args(args, suite.default_samples())?;
        configs.insert(suite.name().to_string(), serde_json::to_value(&cfg).map_err(galext_core::Error::from)?);
        parts.push((suite.name(), suite.run(&cfg)?));
    }
    let base = RunConfig::from_args(args, 1)?;
    let mut all = Report::with_config("all", configs.into(), base.params.to_string(), base.seed);
    for (name, mut part) in parts {
        for c in &mut part.checks {
            c.name = format!("{name}: {}", c.name);
        }
        all.absorb(part);
    }
    Ok(all)
}

fn load_algebra(args: &LoadArgs) -> Result<Report, CliError> {
    let text = fs::read_to_string(&args.path)?;
    let loaded = AlgebraFile::from_json(&text)?.load()?;
    let params = loaded.params.as_ref().map(|p| p.to_string()).unwrap_or_default();
    let config = json!({ "path": args.path.display().to_string(), "format": args.format });
    let mut report = Report::with_config("load-algebra", config, params, 0);
    report.push(Check::exact("jacobi identity", &loaded.jacobi_defect, 0));
    report.push(Check::exact("antisymmetry", &loaded.algebra.antisymmetry_defect(), 0));
    Ok(report)
}

fn emit(report: &Report, format: OutputFormat, out: Option<&std::path::Path>) -> Result<(), CliError> {
    let text = report.render(format)?;
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cli: &Cli, registry: &SuiteRegistry) -> Result<bool, CliError> {
    let (report, format, out) = match &cli.command {
        Command::VerifyAlgebra(a) => (run_suite(registry, "verify-algebra", a)?, a.format, a.out.as_deref()),
        Command::Casimir(a) => (run_suite(registry, "casimir", a)?, a.format, a.out.as_deref()),
        Command::Group(a) => (run_suite(registry, "group", a)?, a.format, a.out.as_deref()),
        Command::Contract(a) => (run_suite(registry, "contract", a)?, a.format, a.out.as_deref()),
        Command::All(a) => (run_all(registry, a)?, a.format, a.out.as_deref()),
        Command::LoadAlgebra(a) => (load_algebra(a)?, a.format, a.out.as_deref()),
    };
    emit(&report, format, out)?;
    Ok(report.pass)
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli, &SuiteRegistry::with_builtins()) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("galext: {e}");
            EXIT_CONFIG
        }
    }
}
