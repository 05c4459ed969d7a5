//! Command-line arguments and the resolved run configuration.

use std::path::PathBuf;

use albert_core::Tolerances;
use clap::{Parser, Subcommand, ValueEnum};

use crate::CliError;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_COUNT: usize = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "albert",
    version,
    about = "Eigenvalue problems in the exceptional Jordan algebra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Read the input matrix from a JSON file ("-" for standard input).
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "inline")]
    pub input: Option<PathBuf>,

    /// Input matrix given directly as JSON.
    #[arg(long, global = true, value_name = "JSON")]
    pub inline: Option<String>,

    #[arg(long, global = true)]
    pub rtol: Option<f64>,

    #[arg(long, global = true)]
    pub atol: Option<f64>,

    /// Threshold for merging nearly equal eigenvalues.
    #[arg(long, global = true)]
    pub mtol: Option<f64>,

    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Number of random samples for `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_COUNT)]
    pub count: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Trace, sigma, determinant and the roots of the characteristic cubic.
    Charpoly,
    /// Spectral decomposition into orthogonal primitive idempotents.
    Decompose,
    /// Diagonalization by three nested F4 conjugations.
    Diagonalize,
    /// Number of nonzero terms in the idempotent decomposition.
    Classify,
    /// 24x24 real embedding and the modified characteristic equation.
    Oracle,
    /// Null Dirac equation for a 2x2 momentum {"s","t","z"}.
    Dirac,
    /// Randomized check of every identity class.
    Verify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    None,
    Path(PathBuf),
    Inline(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input: InputSource,
    pub tolerances: Tolerances,
    pub seed: u64,
    pub count: usize,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            input: InputSource::None,
            tolerances: Tolerances::default(),
            seed: DEFAULT_SEED,
            count: DEFAULT_COUNT,
            format: Format::Json,
        }
    }

    pub fn with_inline(mut self, json: impl Into<String>) -> Self {
        self.input = InputSource::Inline(json.into());
        self
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let mut tolerances = Tolerances::default();
        for (name, value, slot) in [
            ("rtol", cli.rtol, &mut tolerances.rtol),
            ("atol", cli.atol, &mut tolerances.atol),
            ("mtol", cli.mtol, &mut tolerances.mtol),
        ] {
            if let Some(v) = value {
                if !(v.is_finite() && v > 0.0) {
                    return Err(CliError::Invalid(format!(
                        "--{name} must be positive, got {v}"
                    )));
                }
                *slot = v;
            }
        }
        let input = match (cli.input, cli.inline) {
            (Some(p), _) => InputSource::Path(p),
            (None, Some(s)) => InputSource::Inline(s),
            (None, None) => InputSource::None,
        };
        Ok(Self {
            command: cli.command,
            input,
            tolerances,
            seed: cli.seed,
            count: cli.count,
            format: cli.format,
        })
    }
}
