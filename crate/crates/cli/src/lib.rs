//! Command-line front end for `maskcheck-core`.
//!
//! Exit codes: 0 holds, 1 fails, 2 inconclusive, 3 usage or input error,
//! 4 internal inconsistency.

pub mod check;
pub mod error;
pub mod input;
pub mod parse;
pub mod refine;
pub mod report;
pub mod sweep;
pub mod table;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maskcheck_core::cascade::{DEFAULT_DEPTH, DEFAULT_GRID};
use maskcheck_core::trig::DEFAULT_ORACLE_TOL;

pub use error::{CliError, EXIT_FAILS, EXIT_HOLDS, EXIT_INCONCLUSIVE, EXIT_INTERNAL, EXIT_USAGE};
use input::{Arithmetic, MaskSpec, Mode};

#[derive(Debug, Parser)]
#[command(name = "maskcheck", version, about = "Decide the sub-QMF inequality for refinement masks")]
pub struct Cli {
    /// Arithmetic for the closed-form criteria.
    #[arg(long, global = true, value_enum, env = "MASKCHECK_MODE", default_value = "auto")]
    pub mode: Mode,
    /// Oracle tolerance on max T - 1.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_TOL)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the most specific criterion and the oracle.
    Check(MaskCommand),
    /// Run the oracle only.
    Oracle(MaskCommand),
    /// Print the difference table of the symmetric means (stdin: n, then n roots).
    Table(TableArgs),
    /// Compare the even-difference criterion with the oracle on random masks.
    Sweep(SweepArgs),
    /// Write samples of the refinement function's Fourier transform as CSV.
    Refine(RefineArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One `key=value` per line.
    Kv,
}

#[derive(Debug, Args)]
#[group(id = "mask", required = true, multiple = false)]
pub struct MaskArgs {
    /// Roots of P, e.g. "-1, 1/2, -0.5+2i".
    #[arg(long, allow_hyphen_values = true, value_name = "LIST")]
    pub roots: Option<String>,
    /// Coefficients of P in ascending powers.
    #[arg(long, allow_hyphen_values = true, value_name = "LIST")]
    pub coeffs: Option<String>,
}

#[derive(Debug, Args)]
pub struct MaskCommand {
    #[command(flatten)]
    pub mask: MaskArgs,
    /// Exponent shift N of the mask (coefficient input).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub offset: i64,
    /// Initial oracle grid size.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Reproduce the reference listing: full square table in double arithmetic.
    #[arg(long)]
    pub compat: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 6)]
    pub degree: usize,
    /// Range of the random roots besides -1.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true, default_values_t = [-5.0, 0.0])]
    pub range: Vec<f64>,
    /// Draw one root from (0, 5).
    #[arg(long)]
    pub positive: bool,
    /// CSV destination instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RefineArgs {
    #[command(flatten)]
    pub mask: MaskArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub offset: i64,
    /// Truncation depth J.
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    pub depth: usize,
    /// Number of samples.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true, default_values_t = [-8.0, 8.0])]
    pub range: Vec<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Sample even if the preconditions fail.
    #[arg(long)]
    pub force: bool,
}

/// Parses `args`, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_HOLDS };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn spec(mask: &MaskArgs, offset: i64) -> Result<MaskSpec, CliError> {
    MaskSpec::from_args(mask.roots.as_deref(), mask.coeffs.as_deref(), offset)
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(CliError::Usage("--tol must be a finite nonnegative number".into()));
    }
    match &cli.command {
        Command::Check(args) | Command::Oracle(args) => {
            let name = if matches!(cli.command, Command::Check(_)) { "check" } else { "oracle" };
            let analysis = check::analyze(&spec(&args.mask, args.offset)?, cli.mode, cli.tol, args.grid)?;
            let text = match args.format {
                Format::Text => analysis.text(name),
                Format::Kv => analysis.report(name).to_string(),
            };
            print!("{text}");
            if name == "oracle" {
                return Ok(check::status_exit_code(analysis.oracle.verdict.status));
            }
            if let Some(why) = analysis.contradiction() {
                return Err(CliError::Consistency(why));
            }
            Ok(analysis.exit_code())
        }
        Command::Table(args) => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            let tokens = table::read_input(&text)?;
            let (out, answered, has_minus_one) = if args.compat {
                let x = table::parse_float_roots(&tokens)?;
                let (out, answered) = table::compat_table(&x);
                (out, answered, x.contains(&-1.0))
            } else {
                match cli.mode {
                    Mode::Float => {
                        let x = table::parse_float_roots(&tokens)?;
                        let has = x.iter().any(|v| (v + 1.0).abs() <= maskcheck_core::scalar::FLOAT_ROOT_TOL);
                        let (out, answered) = table::triangle(&x);
                        (out, answered, has)
                    }
                    Mode::Auto | Mode::Exact => {
                        let x = table::parse_exact_roots(&tokens)?;
                        let minus_one = -maskcheck_core::Rational::from_integer(1.into());
                        let has = x.contains(&minus_one);
                        let (out, answered) = table::triangle(&x);
                        (out, answered, has)
                    }
                }
            };
            if !has_minus_one {
                eprintln!("warning: no root equals -1; the criterion assumes one");
            }
            print!("{out}");
            Ok(if answered { EXIT_HOLDS } else { EXIT_INCONCLUSIVE })
        }
        Command::Sweep(args) => {
            let config = sweep::SweepConfig {
                seed: args.seed,
                count: args.count,
                degree: args.degree,
                range: (args.range[0], args.range[1]),
                positive: args.positive,
                tol: cli.tol,
                arithmetic: if cli.mode == Mode::Exact { Arithmetic::Exact } else { Arithmetic::Float },
            };
            let mut out = open_output(&args.output)?;
            let result = sweep::run_sweep(&config, &mut out);
            out.flush()?;
            let summary = result?;
            if args.output.is_some() {
                println!("{}", summary.line(&config));
            } else {
                eprintln!("{}", summary.line(&config));
            }
            Ok(EXIT_HOLDS)
        }
        Command::Refine(args) => {
            let mask = spec(&args.mask, args.offset)?.mask()?;
            let config = refine::RefineConfig {
                depth: args.depth,
                grid: args.grid,
                range: (args.range[0], args.range[1]),
                tol: cli.tol,
                force: args.force,
            };
            let (report, samples) = refine::refine(&mask, &config)?;
            let summary = refine::summary(&report);
            let Some(samples) = samples else {
                eprint!("{summary}");
                eprintln!("error: preconditions fail; pass --force to sample anyway");
                return Ok(EXIT_FAILS);
            };
            let mut out = open_output(&args.output)?;
            refine::write_csv(&samples, &mut out)?;
            out.flush()?;
            if args.output.is_some() {
                print!("{summary}");
            } else {
                eprint!("{summary}");
            }
            Ok(EXIT_HOLDS)
        }
    }
}
