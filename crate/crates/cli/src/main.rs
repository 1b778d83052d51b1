mod commands;
mod output;
mod reference;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use xns9_core::ecurve::WeierstrassCurve;
use xns9_core::exactalg::Extended;
use xns9_core::Error;

use commands::ReportParams;
use output::{document, Output};

#[derive(Parser)]
#[command(name = "xns9", version, about = "Verify the integral points of X_ns^+(9) and their consequences")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one group of structural checks.
    Verify {
        #[arg(value_enum)]
        what: VerifyTarget,
    },
    /// Solve m^3 - 3mn^2 + n^3 = c for c in the targets, |m|, |n| <= bound.
    Thue {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "1,-1,3,-3")]
        targets: Vec<i64>,
        #[arg(long, default_value_t = 10_000)]
        bound: i64,
    },
    /// Integral points with their CM discriminants.
    Points {
        #[arg(long, default_value_t = 10_000)]
        bound: i64,
        #[arg(long, default_value_t = 40)]
        digits: u32,
    },
    /// Traces of Frobenius for primes up to pmax.
    Ap {
        #[arg(long, default_value_t = 100)]
        pmax: u64,
        /// a1,a2,a3,a4,a6 (defaults to the non-CM curve).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, num_args = 1)]
        curve: Option<Vec<i64>>,
    },
    /// Class number of the imaginary quadratic order of discriminant d.
    Classnum {
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Evaluate t(y) and j = t^3 at a rational y ("m/n", "m" or "infinity").
    EvalT {
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Run every verification and render both tables.
    Report {
        #[arg(long, default_value_t = 10_000)]
        bound: i64,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        #[arg(long, default_value_t = 100)]
        pmax: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Groups,
    Covering,
    Param,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyTargets
            | Error::BadBound
            | Error::DegenerateForm
            | Error::BadDiscriminant(_)
            | Error::NotFundamental(_)
            | Error::InsufficientPrecision(..)
            | Error::NotPrime(_)
            | Error::Singular => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

fn parse_y(s: &str) -> Result<Extended<BigRational>, Failure> {
    if matches!(s, "inf" | "infinity") {
        return Ok(Extended::Infinity);
    }
    s.parse::<BigRational>()
        .map(Extended::Finite)
        .map_err(|_| Failure::Usage(format!("cannot parse {s:?} as a rational number")))
}

fn parse_curve(c: Option<Vec<i64>>) -> Result<Option<WeierstrassCurve>, Failure> {
    match c.as_deref() {
        None => Ok(None),
        Some(&[a1, a2, a3, a4, a6]) => Ok(Some(WeierstrassCurve::new(a1, a2, a3, a4, a6))),
        Some(v) => Err(Failure::Usage(format!("--curve needs 5 coefficients, got {}", v.len()))),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn write_stdout(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit(name: &str, format: Format, out: Output) -> bool {
    match format {
        Format::Text => write_stdout(&out.text),
        Format::Json => write_stdout(&format!("{}\n", document(name, out.json))),
    }
    out.passed
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let format = cli.format;
    Ok(match cli.command {
        Command::Verify { what } => match what {
            VerifyTarget::Groups => emit("verify groups", format, commands::groups()?),
            VerifyTarget::Covering => emit("verify covering", format, commands::covering()?),
            VerifyTarget::Param => emit("verify param", format, commands::param()?),
        },
        Command::Thue { targets, bound } => {
            let run = commands::thue_run(&targets, bound)?;
            match format {
                Format::Text => write_stdout(&commands::thue_text(&run)),
                Format::Json => {
                    let lines: String =
                        run.solutions.iter().map(|s| format!("{}\n", serde_json::json!(s))).collect();
                    write_stdout(&lines);
                }
            }
            eprint!("{}", run.obstruction);
            run.obstruction.passed()
        }
        Command::Points { bound, digits } => emit("points", format, commands::points(bound, digits)?),
        Command::Ap { pmax, curve } => emit("ap", format, commands::ap(pmax, parse_curve(curve)?)?),
        Command::Classnum { d } => emit("classnum", format, commands::classnum(d)?),
        Command::EvalT { y } => emit("eval-t", format, commands::eval_t(&parse_y(&y)?)?),
        Command::Report { bound, digits, pmax } => {
            emit("report", format, commands::report(&ReportParams { bound, digits, pmax })?)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
