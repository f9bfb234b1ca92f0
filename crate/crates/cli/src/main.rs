mod commands;
mod error;
mod format;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symplectic_frieze::arith::set_float_tolerance;
use symplectic_frieze::ScalarKind;

use error::CliError;
use format::Format;

#[derive(Parser)]
#[command(name = "sfrieze", version, about = "Symplectic 2-friezes, difference equations, SL-friezes, cluster seeds and polygons")]
struct Cli {
    /// Scalar field for entries; read from the input header when omitted, else rational.
    #[arg(long, global = true, value_enum)]
    scalar: Option<ScalarArg>,
    /// Zero threshold for complex-float arithmetic.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output encoding for friezes.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Group,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScalarArg {
    Rational,
    Gaussian,
    ComplexFloat,
}

impl From<ScalarArg> for ScalarKind {
    fn from(s: ScalarArg) -> Self {
        match s {
            ScalarArg::Rational => ScalarKind::Rational,
            ScalarArg::Gaussian => ScalarKind::Gaussian,
            ScalarArg::ComplexFloat => ScalarKind::ComplexFloat,
        }
    }
}

#[derive(Subcommand)]
enum Group {
    /// Build, check and transform symplectic 2-friezes.
    #[command(subcommand)]
    Frieze(FriezeCmd),
    /// Symmetric difference equations.
    #[command(subcommand)]
    Eq(EqCmd),
    /// SL-friezes and their dualities.
    #[command(subcommand)]
    Sl(SlCmd),
    /// Seeds, mutations and the formal frieze.
    #[command(subcommand)]
    Cluster(ClusterCmd),
    /// Lifted polygons in 4-space.
    #[command(subcommand)]
    Polygon(PolygonCmd),
    /// Positive integer frieze census.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Args, Clone)]
pub struct Input {
    /// Input file; stdin when absent or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct Coeffs {
    /// Comma-separated a-coefficients.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Comma-separated b-coefficients.
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Subcommand)]
pub enum FriezeCmd {
    /// Propagate from coefficient sequences.
    FromCoeffs(Coeffs),
    /// Propagate from values on a double zig-zag.
    FromZigzag {
        #[arg(long)]
        width: usize,
        /// Whites of every row, then blacks of every row.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Left display column of each row; defaults to two straight columns at 1.
        #[arg(long, allow_hyphen_values = true)]
        columns: Option<String>,
    },
    /// Check local rules, tameness and glide symmetry.
    Verify(Input),
    /// Render in the chosen format.
    Show(Input),
    /// Sign-twist the black entries.
    Twist(Input),
}

#[derive(Subcommand)]
pub enum EqCmd {
    /// Superperiodicity test on basis solutions.
    Check(Coeffs),
    /// Product of companion matrices over one period.
    Monodromy(Coeffs),
    /// The ten variety residuals.
    Variety(Coeffs),
}

#[derive(Subcommand)]
pub enum SlCmd {
    /// Black subarray of a symplectic frieze.
    Black(Input),
    /// Complete an SL(4)-frieze to a symplectic frieze.
    ToSymplectic(Input),
    /// Projective dual (adjacent k x k minors).
    Dual(Input),
    /// Gale dual (coefficient array).
    Gale(Input),
}

#[derive(Subcommand)]
pub enum ClusterCmd {
    /// Clusters along the bipartite belt.
    Belt {
        #[arg(long)]
        width: usize,
        /// Number of composite steps.
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Mutate the initial seed along a word of 1-based vertices.
    Mutate {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        word: String,
    },
    /// Formal frieze in the initial variables.
    Formal {
        #[arg(long)]
        width: usize,
    },
    /// Numeric frieze of the chart reached by a mutation word.
    Evaluate {
        #[arg(long)]
        width: usize,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value = "")]
        word: String,
    },
}

#[derive(Subcommand)]
pub enum PolygonCmd {
    /// Cut a polygon from the black entries.
    FromFrieze {
        #[command(flatten)]
        input: Input,
        /// Row of the block's first line.
        #[arg(long, default_value_t = 0)]
        anchor: i64,
    },
    /// Frieze from pairings of the vertices.
    ToFrieze(Input),
    /// Rescale to the normalized lift (complex floats).
    Normalize(Input),
    /// Coefficients of the recurrence satisfied by the vertices.
    Coeffs(Input),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DedupArg {
    None,
    Translation,
    Dihedral,
}

#[derive(Subcommand)]
pub enum SearchCmd {
    /// Count positive integer friezes with seed entries up to a bound.
    Enumerate {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = DedupArg::None)]
        dedup: DedupArg,
        /// Also print every frieze.
        #[arg(long)]
        list: bool,
    },
    /// Dihedral orbit representatives.
    Orbits {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        bound: u64,
    },
}

pub fn read_input(input: &Input) -> Result<String, CliError> {
    let mut s = String::new();
    match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p)?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

/// Result of a command: text to print and whether a verification failed.
pub struct Outcome {
    pub text: String,
    pub failed: Option<String>,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Self { text, failed: None }
    }

    pub fn check(text: String, passed: bool, why: impl Into<String>) -> Self {
        Self {
            text,
            failed: (!passed).then(|| why.into()),
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    if let Some(t) = cli.tolerance {
        if t.is_nan() || t <= 0.0 {
            return Err(CliError::Usage("tolerance must be positive".into()));
        }
        set_float_tolerance(t);
    }
    let ctx = commands::Context {
        kind: cli.scalar.map(Into::into),
        format: cli.format,
    };
    match cli.command {
        Group::Frieze(c) => commands::frieze(&ctx, c),
        Group::Eq(c) => commands::eq(&ctx, c),
        Group::Sl(c) => commands::sl(&ctx, c),
        Group::Cluster(c) => commands::cluster(&ctx, c),
        Group::Polygon(c) => commands::polygon(&ctx, c),
        Group::Search(c) => commands::search(&ctx, c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(outcome) => {
            let written = match &out {
                Some(p) => std::fs::write(p, &outcome.text),
                None => std::io::stdout().write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            match outcome.failed {
                Some(why) => {
                    eprintln!("verification failed: {why}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
