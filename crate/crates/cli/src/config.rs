use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use galext_core::ExtensionParams;
use serde::Serialize;

use crate::error::CliError;

/// Upper bound on `--max-degree`; the centralizer search grows as `O(d^6)`.
pub const MAX_DEGREE_CAP: u32 = 4;

#[derive(Debug, Parser)]
#[command(name = "galext", version, about = "Verify central extensions of the 2+1 Galilei algebra and group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jacobi, antisymmetry and the k-removing basis change.
    VerifyAlgebra(CommonArgs),
    /// Centrality of the Casimir candidates and the bounded-degree centralizer.
    Casimir(CommonArgs),
    /// Cocycle identity, inverses, coboundaries and the k-removing group map.
    Group(CommonArgs),
    /// Convergence of the Poincaré to Galilei limits.
    Contract(CommonArgs),
    /// Every suite in turn with the same configuration.
    All(CommonArgs),
    /// Load an algebra from a JSON definition and check it.
    LoadAlgebra(LoadArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub k: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub m: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub l: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random samples per check. Defaults to 1000 for `group`, 20 for `contract`.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long = "max-degree", default_value_t = 3)]
    pub max_degree: u32,
    /// `lo:hi:logxN`, a comma-separated list, or a single value.
    #[arg(long = "c-grid", default_value = "1e2:1e6:logx10")]
    pub c_grid: String,
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Limit experiment to run; repeatable. Defaults to all registered.
    #[arg(long)]
    pub experiment: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct LoadArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Validated run configuration, echoed verbatim into every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub params: ExtensionParams,
    pub seed: u64,
    pub samples: usize,
    pub max_degree: u32,
    pub c_grid: Vec<f64>,
    pub tolerance: f64,
    pub format: OutputFormat,
    pub experiments: Vec<String>,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs, default_samples: usize) -> Result<Self, CliError> {
        let params = ExtensionParams::parse(&args.k, &args.m, &args.l)?;
        let samples = args.samples.unwrap_or(default_samples);
        if samples == 0 {
            return Err(CliError::Config("--samples must be at least 1".into()));
        }
        if args.max_degree == 0 || args.max_degree > MAX_DEGREE_CAP {
            return Err(CliError::Config(format!("--max-degree must lie in 1..={MAX_DEGREE_CAP}")));
        }
        if !(args.tolerance > 0.0) || !args.tolerance.is_finite() {
            return Err(CliError::Config("--tolerance must be positive".into()));
        }
        Ok(Self {
            params,
            seed: args.seed,
            samples,
            max_degree: args.max_degree,
            c_grid: parse_c_grid(&args.c_grid)?,
            tolerance: args.tolerance,
            format: args.format,
            experiments: args.experiment.clone(),
        })
    }
}

/// Parses `lo:hi:logxN` (geometric steps of factor `N` up to `hi`), a comma
/// list, or a single value. Every entry must be positive and the sequence
/// strictly increasing.
pub fn parse_c_grid(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = |why: &str| CliError::Config(format!("invalid --c-grid `{text}`: {why}"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad("not a number"));
    let grid = if let Some((lo, rest)) = text.split_once(':') {
        let (hi, step) = rest.split_once(':').ok_or_else(|| bad("expected lo:hi:logxN"))?;
        let factor = num(step.trim().strip_prefix("logx").ok_or_else(|| bad("step must be logxN"))?)?;
        let (lo, hi) = (num(lo)?, num(hi)?);
        if !(factor > 1.0) || !(lo > 0.0) || !(hi >= lo) {
            return Err(bad("need 0 < lo <= hi and N > 1"));
        }
        let count = ((hi / lo).ln() / factor.ln() + 1e-9).floor() as i32;
        (0..=count).map(|i| lo * factor.powi(i)).collect()
    } else {
        text.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if grid.iter().any(|c| !(c.is_finite() && *c > 0.0)) {
        return Err(bad("entries must be positive"));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(bad("entries must be strictly increasing"));
    }
    Ok(grid)
}
