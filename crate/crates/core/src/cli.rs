//! Command-line front end: `solve`, `sweep`, `singular`, `compare`, `check`.
//!
//! Exit status: 0 success, 1 usage or parse error, 2 validation error,
//! 3 check failure, 4 numeric failure (pole, non-convergence). Results go to
//! the output stream (or `--out`), diagnostics to the error stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::error::Error;
use crate::exact::{DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL};
use crate::impedance::{
    compare, effective_complex, effective_symbolic, sweep, DEFAULT_COMPARE_TOL,
};
use crate::netlist::{parse_netlist, NetlistError};
use crate::network::Network;
use crate::output::{Format, Render};
use crate::solver::{singular_frequencies, DEFAULT_RANK_TOL};
use crate::verify::{all_passed, run_all};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "acnet", version, about = "Effective impedance of RLC networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Effective impedance, symbolic or at one λ.
    Solve(SolveArgs),
    /// Impedance over a grid of physical frequencies, as CSV by default.
    Sweep(SweepArgs),
    /// Zeros of the Dirichlet determinant; physical ones are flagged.
    Singular(SingularArgs),
    /// Compare the complex and the symbolic impedance at one λ.
    Compare(CompareArgs),
    /// Run the theorem suite on the network.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write results to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// text, csv or structured.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("point").required(true).args(["symbolic", "omega", "lambda"])))]
struct SolveArgs {
    file: PathBuf,
    /// Solve over R(λ) and print Z and P as coefficient lists.
    #[arg(long)]
    symbolic: bool,
    /// Physical frequency; λ = iω.
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// Arbitrary complex λ given as RE,IM.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    lambda: Option<Complex64>,
    /// Relative rank tolerance.
    #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    file: PathBuf,
    #[arg(long)]
    omega_min: f64,
    #[arg(long)]
    omega_max: f64,
    #[arg(long)]
    points: usize,
    /// Space the grid uniformly in log ω.
    #[arg(long)]
    log: bool,
    /// Relative rank tolerance.
    #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SingularArgs {
    file: PathBuf,
    /// Root-finder residual tolerance.
    #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("point").required(true).args(["omega", "lambda"])))]
struct CompareArgs {
    file: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    lambda: Option<Complex64>,
    /// Relative agreement tolerance.
    #[arg(long, default_value_t = DEFAULT_COMPARE_TOL)]
    tol: f64,
    /// Relative rank tolerance for the complex solve.
    #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
    rank_tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances per check (and Thomson competitors).
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_lambda(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    Ok(Complex64::new(parse(re)?, parse(im)?))
}

fn point(omega: Option<f64>, lambda: Option<Complex64>) -> Complex64 {
    lambda.unwrap_or_else(|| Complex64::new(0.0, omega.expect("clap enforces one of omega/lambda")))
}

/// A diagnostic plus the exit status it maps to.
struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Network(_) | Error::NonPositiveWeight(..) => EXIT_VALIDATION,
            Error::InvalidArgument(_) => EXIT_USAGE,
            Error::Exact(crate::error::ExactError::Literal(_)) => EXIT_USAGE,
            Error::Exact(_) | Error::ZeroAdmittance => EXIT_NUMERIC,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

impl From<NetlistError> for Failure {
    fn from(e: NetlistError) -> Self {
        match e {
            NetlistError::Syntax { .. } => Failure {
                status: EXIT_USAGE,
                message: e.to_string(),
            },
            NetlistError::Invalid(inner) => inner.into(),
        }
    }
}

fn load(path: &Path) -> Result<Network, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        status: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_netlist(&text).map_err(|e| {
        let f = Failure::from(e);
        Failure {
            message: format!("{}: {}", path.display(), f.message),
            ..f
        }
    })
}

fn emit(
    output: &OutputArgs,
    default: Format,
    result: &dyn Render,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let text = result.render(output.format.unwrap_or(default));
    let io = |e: std::io::Error| Failure {
        status: EXIT_USAGE,
        message: e.to_string(),
    };
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => stdout.write_all(text.as_bytes()).map_err(io),
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Solve(a) => {
            let net = load(&a.file)?;
            if a.symbolic {
                emit(&a.output, Format::Text, &effective_symbolic(&net)?, stdout)?;
            } else {
                let r = effective_complex(&net, point(a.omega, a.lambda), a.tol)?;
                emit(&a.output, Format::Text, &r, stdout)?;
            }
        }
        Command::Sweep(a) => {
            let net = load(&a.file)?;
            let rows = sweep(&net, a.omega_min, a.omega_max, a.points, a.log, a.tol)?;
            for row in &rows {
                if let Err(e) = &row.result {
                    let _ = writeln!(stderr, "omega={}: {e}", row.omega);
                }
            }
            emit(&a.output, Format::Csv, &rows, stdout)?;
        }
        Command::Singular(a) => {
            let net = load(&a.file)?;
            let set = singular_frequencies(&net, a.tol, a.max_iter)?;
            emit(&a.output, Format::Text, &set, stdout)?;
        }
        Command::Compare(a) => {
            let net = load(&a.file)?;
            let report = compare(&net, point(a.omega, a.lambda), a.rank_tol, a.tol)?;
            emit(&a.output, Format::Text, &report, stdout)?;
        }
        Command::Check(a) => {
            let net = load(&a.file)?;
            let reports = run_all(&net, a.seed, a.trials);
            for r in reports
                .iter()
                .filter(|r| r.status == crate::verify::CheckStatus::Skipped)
            {
                let _ = writeln!(stderr, "note: {} skipped: {}", r.check, r.witness);
            }
            emit(&a.output, Format::Text, &reports, stdout)?;
            if !all_passed(&reports) {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.status
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
