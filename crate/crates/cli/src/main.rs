//! `ghbounds`: command-line front end for the height-bound checker.
//!
//! Exit codes: 0 success, 1 a bound failed with every hypothesis verified or
//! asserted (or a sweep found a counterexample), 2 input or parse error,
//! 3 resource limit, 4 hypothesis violated.

mod commands;
mod session;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ghbounds::ResourceLimits;
use thiserror::Error;

use commands::{CheckArgs, Output, SweepArgs};
use session::{Session, SessionError};

#[derive(Parser, Debug)]
#[command(name = "ghbounds", version, about = "Exact height-bound checks on polynomial modules")]
struct Cli {
    /// Session file declaring the ring and the named objects.
    #[arg(long, global = true)]
    session: Option<PathBuf>,
    /// Print a JSON document instead of the text report.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of critical pairs per Gröbner basis.
    #[arg(long, global = true, env = "GH_MAX_PAIRS", default_value_t = ResourceLimits::default().max_pairs)]
    max_pairs: usize,
    /// Maximum degree of any basis element or pair.
    #[arg(long, global = true, env = "GH_MAX_DEGREE", default_value_t = ResourceLimits::default().max_degree)]
    max_degree: u64,
    /// Maximum number of basis elements.
    #[arg(long, global = true, env = "GH_MAX_BASIS", default_value_t = ResourceLimits::default().max_basis)]
    max_basis: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis of an ideal.
    Gb { name: String },
    /// Krull dimension of R/I with an independent set.
    Dim { name: String },
    /// Height of an ideal.
    Height { name: String },
    /// All t-minors of a matrix.
    Minors { matrix: String, t: usize },
    /// Fitting ideal Fitt_i of the cokernel.
    Fitting { matrix: String, i: usize },
    /// Generalized row ideal b·A.
    Rowideal { matrix: String, vector: String },
    /// Order ideal of x in the cokernel.
    Orderideal { matrix: String, vector: String },
    /// Syzygies of the columns.
    Kernel { matrix: String },
    /// Presentation of the symmetric algebra of the cokernel.
    Sym { matrix: String },
    /// Evaluate one bound and report both sides and hypothesis status.
    Check(CheckArgs),
    /// Randomized sweep over F_p; needs no session.
    Sweep(SweepArgs),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error(transparent)]
    Algebra(#[from] ghbounds::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use ghbounds::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Session(SessionError::Algebra { source, .. }) => match source {
                E::ResourceLimit(_) => 3,
                _ => 2,
            },
            CliError::Session(_) => 2,
            CliError::Algebra(e) => match e {
                E::ResourceLimit(_) => 3,
                E::HypothesisViolated(_) | E::XNotInMN(_) | E::WitnessNotContaining(_) => 4,
                E::Counterexample { .. } => 1,
                _ => 2,
            },
        }
    }
}

fn load(cli: &Cli, limits: ResourceLimits) -> Result<Session, CliError> {
    let path = cli
        .session
        .as_ref()
        .ok_or_else(|| CliError::Usage("this command needs --session FILE".into()))?;
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read session {}: {e}", path.display())))?;
    Ok(Session::parse(&src, limits)?)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let limits = ResourceLimits {
        max_pairs: cli.max_pairs,
        max_degree: cli.max_degree,
        max_basis: cli.max_basis,
    };
    if let Command::Sweep(args) = &cli.command {
        return commands::sweep(args, limits);
    }
    let s = load(cli, limits)?;
    match &cli.command {
        Command::Gb { name } => commands::gb(&s, name),
        Command::Dim { name } => commands::dim(&s, name, false),
        Command::Height { name } => commands::dim(&s, name, true),
        Command::Minors { matrix, t } => commands::minors_cmd(&s, matrix, *t),
        Command::Fitting { matrix, i } => commands::fitting(&s, matrix, *i),
        Command::Rowideal { matrix, vector } => commands::rowideal(&s, matrix, vector),
        Command::Orderideal { matrix, vector } => commands::orderideal(&s, matrix, vector),
        Command::Kernel { matrix } => commands::kernel_cmd(&s, matrix),
        Command::Sym { matrix } => commands::sym(&s, matrix),
        Command::Check(args) => commands::check(&s, args),
        Command::Sweep(_) => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("valid json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.exit)
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let doc = serde_json::json!({"error": e.to_string(), "exit_code": code});
                println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
