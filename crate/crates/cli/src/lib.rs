//! Command-line front end for `czorb_core`.
//!
//! [`run`] parses an argument list, dispatches to the library and returns the
//! exit code together with the text for stdout and stderr, so the binary is a
//! thin wrapper and tests need no subprocess.
//!
//! Exit codes: 0 success, 1 usage, 2 invalid input or overflow, 3 case not
//! covered (or extrapolation refused), 4 numeric check failed.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand};
use czorb_core::{Error, Int, Rational, DEFAULT_EVAL_BUDGET};
use serde_json::{json, Value};

pub mod batch;
pub mod records;
pub mod render;

/// Environment variable capping quadrature evaluations.
pub const BUDGET_VAR: &str = "CZORB_EVAL_BUDGET";

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failed command, as reported to the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: "usage",
            message: message.into(),
            exit_code: 1,
        }
    }

    /// A batch line that is not a valid record.
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            kind: "parse",
            message: message.into(),
            exit_code: 1,
        }
    }

    /// A verification whose two sides disagree.
    pub fn check(message: impl Into<String>) -> Self {
        Failure {
            kind: "check-failed",
            message: message.into(),
            exit_code: 4,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "kind": self.kind, "message": self.message, "exit_code": self.exit_code })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (kind, exit_code) = match &e {
            Error::Domain(_) => ("domain", 2),
            Error::NotCoprime { .. } => ("not-coprime", 2),
            Error::Overflow(_) => ("overflow", 2),
            Error::Internal(_) => ("internal", 2),
            Error::Uncovered(_) => ("uncovered", 3),
            Error::Unsupported(_) => ("unsupported", 3),
            Error::Convergence { .. } => ("convergence", 4),
            Error::Resolution { .. } => ("resolution", 4),
        };
        Failure {
            kind,
            message: e.to_string(),
            exit_code,
        }
    }
}

/// Settings normally taken from the environment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub eval_budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            eval_budget: DEFAULT_EVAL_BUDGET,
        }
    }
}

impl Config {
    pub fn from_env() -> Result<Self, Failure> {
        match std::env::var(BUDGET_VAR) {
            Err(std::env::VarError::NotPresent) => Ok(Config::default()),
            Err(e) => Err(Failure::usage(format!("{BUDGET_VAR}: {e}"))),
            Ok(s) => match s.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(Config { eval_budget: n }),
                _ => Err(Failure::usage(format!(
                    "{BUDGET_VAR} must be a positive integer, got {s:?}"
                ))),
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "czorb",
    version,
    about = "Conley-Zehnder indices of Reeb orbits over weighted projective spaces, \
             weighted complete intersections and Brieskorn orbifolds"
)]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of a weight vector: sums, d_j, e_j, a_w, reduced weights.
    Weights {
        /// Comma-separated positive weights with gcd 1.
        #[arg(value_name = "CSV")]
        weights: String,
    },
    /// Conley-Zehnder indices.
    Cz {
        #[command(subcommand)]
        command: CzCommand,
    },
    /// (Co)homology and Chern number of the teardrop P(1, m).
    Teardrop {
        m: String,
        /// Highest degree tabulated.
        #[arg(long, default_value_t = batch::default_degree())]
        degree: u32,
    },
    /// Independent numeric and combinatorial checks.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Evaluate newline-delimited JSON records.
    Batch { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CzCommand {
    /// Index of the principal orbit.
    Principal(PrincipalArgs),
    /// Index of the orbit through a point with the given support.
    Orbit(OrbitArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("space").required(true).args(["wps", "wci", "brieskorn"])))]
struct PrincipalArgs {
    /// Weights of P(w).
    #[arg(long, value_name = "CSV")]
    wps: Option<String>,
    /// Ambient weights of a complete intersection.
    #[arg(long, value_name = "CSV", requires = "degrees")]
    wci: Option<String>,
    /// Degrees of the defining equations.
    #[arg(long, value_name = "CSV", requires = "wci")]
    degrees: Option<String>,
    /// Brieskorn exponents.
    #[arg(long, value_name = "CSV")]
    brieskorn: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("space").required(true).args(["wps", "brieskorn"])))]
struct OrbitArgs {
    #[arg(long, value_name = "CSV")]
    wps: Option<String>,
    #[arg(long, value_name = "CSV")]
    brieskorn: Option<String>,
    /// Indices of the nonzero coordinates, starting at 0.
    #[arg(long, value_name = "CSV")]
    support: String,
    /// Evaluate cases outside the established formulas.
    #[arg(long)]
    allow_extrapolation: bool,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Quadrature of the chart integral against -1/w0.
    #[command(name = "lemma42")]
    ChartIntegral {
        #[arg(long)]
        w0: u64,
        #[arg(long)]
        w1: u64,
        #[arg(long, default_value_t = batch::default_tol())]
        tol: f64,
    },
    /// Phase winding of prod exp(2 pi i r_j t) against the rate sum.
    Winding {
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        rates: String,
    },
    /// Closed-form scalar index against a crossing count.
    ScalarCz {
        #[arg(long = "T", value_name = "P/Q")]
        t: String,
    },
}

fn parse_int(s: &str) -> Result<Int, Failure> {
    use std::num::IntErrorKind;
    let s = s.trim();
    s.parse::<Int>().map_err(|e| match e.kind() {
        IntErrorKind::PosOverflow | IntErrorKind::NegOverflow => Failure::from(Error::Overflow("integer literal")),
        _ => Failure::usage(format!("expected an integer, got {s:?}")),
    })
}

/// Parses `a,b,c`.
pub fn parse_csv(s: &str) -> Result<Vec<Int>, Failure> {
    s.split(',').map(parse_int).collect()
}

fn parse_indices(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("expected a coordinate index, got {:?}", x.trim())))
        })
        .collect()
}

fn parse_rates(s: &str) -> Result<Vec<i64>, Failure> {
    parse_csv(s)?
        .into_iter()
        .map(|r| i64::try_from(r).map_err(|_| Failure::from(Error::Overflow("rate"))))
        .collect()
}

fn dispatch(command: Command, config: &Config) -> Result<Value, Failure> {
    match command {
        Command::Weights { weights } => records::weights_record(&parse_csv(&weights)?),
        Command::Cz {
            command: CzCommand::Principal(p),
        } => match (p.wps, p.wci, p.degrees, p.brieskorn) {
            (Some(w), _, _, _) => records::principal_wps(&parse_csv(&w)?),
            (_, Some(w), Some(d), _) => records::principal_wci(&parse_csv(&w)?, &parse_csv(&d)?),
            (_, _, _, Some(a)) => records::principal_brieskorn(&parse_csv(&a)?),
            _ => Err(Failure::usage(
                "one of --wps, --wci with --degrees, --brieskorn is required",
            )),
        },
        Command::Cz {
            command: CzCommand::Orbit(o),
        } => {
            let support = parse_indices(&o.support)?;
            match (o.wps, o.brieskorn) {
                (Some(w), _) => records::orbit_wps(&parse_csv(&w)?, &support, o.allow_extrapolation),
                (_, Some(a)) => records::orbit_brieskorn(&parse_csv(&a)?, &support, o.allow_extrapolation),
                _ => Err(Failure::usage("one of --wps, --brieskorn is required")),
            }
        }
        Command::Teardrop { m, degree } => records::teardrop_record(&parse_int(&m)?, degree),
        Command::Verify { command } => match command {
            VerifyCommand::ChartIntegral { w0, w1, tol } => records::chart_record(w0, w1, tol, config.eval_budget),
            VerifyCommand::Winding { rates } => records::winding_record(&parse_rates(&rates)?),
            VerifyCommand::ScalarCz { t } => {
                let t: Rational<Int> = t.parse().map_err(|e: Error| match e {
                    Error::Overflow(_) => Failure::from(e),
                    other => Failure::usage(other.to_string()),
                })?;
                records::scalar_cz_record(&t)
            }
        },
        Command::Batch { .. } => unreachable!("batch is handled by run_with"),
    }
}

/// Runs the command line `args` (without the program name) using the budget
/// from `CZORB_EVAL_BUDGET`.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    match Config::from_env() {
        Ok(config) => run_with(args, &config),
        Err(f) => Outcome {
            code: f.exit_code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

pub fn run_with<I, S>(args: I, config: &Config) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("czorb")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    if let Command::Batch { file } = &cli.command {
        return batch::run_batch(file, config.eval_budget, cli.json);
    }
    let json = cli.json;
    match dispatch(cli.command, config) {
        Ok(value) => Outcome {
            code: 0,
            stdout: if json {
                format!("{}\n", serde_json::to_string(&value).expect("JSON values serialize"))
            } else {
                render::table(&value, 0)
            },
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.exit_code,
            stdout: if json {
                format!("{}\n", json!({ "error": f.to_json() }))
            } else {
                String::new()
            },
            stderr: format!("error[{}]: {}\n", f.kind, f.message),
        },
    }
}
