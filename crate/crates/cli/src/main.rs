//! `locoh`: batch driver for the local cohomology engine.
//!
//! Every invocation prints one JSON report on stdout. Exit codes: 0 on
//! success, 1 when `verify-examples` finds a mismatch or on an internal
//! failure, 2 on invalid input, 3 when a search box hit its cap.

mod commands;
mod fixtures;
mod problem;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use locoh_core::cohomology::Field;
use serde_json::{json, Value};
use thiserror::Error;

use commands::{Command, Criterion, Settings};
use problem::ProblemSpec;

const SCHEMA: u64 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("search box reached its cap ({cap}) without stabilizing: {what}")]
    BoxInsufficient { what: String, cap: i64 },
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<locoh_core::Error> for CliError {
    fn from(e: locoh_core::Error) -> Self {
        use locoh_core::Error as E;
        match e {
            E::BoxInsufficient { what, cap } => CliError::BoxInsufficient { what, cap },
            E::DimensionMismatch { .. } | E::NotPointed | E::Invalid(_) => CliError::Validation(e.to_string()),
            E::Overflow | E::LiftNotFound(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::BoxInsufficient { .. } => "box-insufficient",
            CliError::Internal(_) => "internal",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::BoxInsufficient { .. } => 3,
            CliError::Internal(_) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "locoh", version, about = "Local cohomology of affine semigroup rings and their monomial quotients")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Initial half-width of the grain sampling box (overrides the problem file).
    #[arg(long = "box", global = true, env = "LOCOH_BOX")]
    initial_box: Option<i64>,
    /// Largest half-width the grain sampling box may grow to.
    #[arg(long, global = true, env = "LOCOH_BOX_CAP")]
    box_cap: Option<i64>,
    /// Field characteristic: 0 or a prime (overrides the problem file).
    #[arg(long = "char", global = true, env = "LOCOH_CHAR")]
    characteristic: Option<u64>,
    /// Worker threads; all available cores when absent.
    #[arg(long, global = true, env = "LOCOH_THREADS")]
    threads: Option<usize>,
    /// Add wall-clock timing to the report (reports are otherwise byte-identical across runs).
    #[arg(long, global = true, env = "LOCOH_TIMING")]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Face lattice of the cone.
    Faces { problem: PathBuf },
    /// Hilbert basis and hole decomposition of the semigroup.
    Holes { problem: PathBuf },
    /// Degree pairs and overlap classes of every localization.
    Pairs { problem: PathBuf },
    /// Grains of the degree space with their chaffs.
    Grains { problem: PathBuf },
    /// Cohomology of the Ishida slice of every chaff.
    Cohomology { problem: PathBuf },
    /// Hilbert series of every local cohomology module.
    Hilbert { problem: PathBuf },
    /// Cohen–Macaulay test.
    Cm {
        problem: PathBuf,
        #[arg(long, value_enum, default_value = "chaff")]
        criterion: Criterion,
    },
    /// Trung–Hoa Cohen–Macaulay test for semigroup rings.
    TrungHoa { problem: PathBuf },
    /// Rerun the bundled worked examples against their frozen results.
    VerifyExamples {
        /// Read fixtures from this directory instead of the bundled corpus.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

impl Sub {
    fn name(&self) -> &'static str {
        match self {
            Sub::Faces { .. } => "faces",
            Sub::Holes { .. } => "holes",
            Sub::Pairs { .. } => "pairs",
            Sub::Grains { .. } => "grains",
            Sub::Cohomology { .. } => "cohomology",
            Sub::Hilbert { .. } => "hilbert",
            Sub::Cm { .. } => "cm",
            Sub::TrungHoa { .. } => "trung-hoa",
            Sub::VerifyExamples { .. } => "verify-examples",
        }
    }

    fn command(&self) -> Option<(Command, &PathBuf)> {
        Some(match self {
            Sub::Faces { problem } => (Command::Faces, problem),
            Sub::Holes { problem } => (Command::Holes, problem),
            Sub::Pairs { problem } => (Command::Pairs, problem),
            Sub::Grains { problem } => (Command::Grains, problem),
            Sub::Cohomology { problem } => (Command::Cohomology, problem),
            Sub::Hilbert { problem } => (Command::Hilbert, problem),
            Sub::Cm { problem, .. } => (Command::Cm, problem),
            Sub::TrungHoa { problem } => (Command::TrungHoa, problem),
            Sub::VerifyExamples { .. } => return None,
        })
    }
}

fn settings(cli: &Cli, prob: Option<&ProblemSpec>) -> Result<Settings, CliError> {
    let characteristic = cli.characteristic.or(prob.and_then(|s| s.characteristic)).unwrap_or(0);
    let initial_box = cli.initial_box.or(prob.and_then(|s| s.initial_box));
    if matches!(initial_box, Some(b) if b < 1) || matches!(cli.box_cap, Some(b) if b < 1) {
        return Err(CliError::Validation("box bounds must be positive".into()));
    }
    let criterion = match cli.command {
        Sub::Cm { criterion, .. } => criterion,
        _ => Criterion::Chaff,
    };
    Ok(Settings { initial_box, box_cap: cli.box_cap, field: Field::new(characteristic)?, criterion })
}

/// The report body and the process exit code.
fn execute(cli: &Cli) -> (Value, u8) {
    let mut report = json!({"schema": SCHEMA, "command": cli.command.name()});
    let started = Instant::now();
    let result: Result<(Value, Vec<String>, u8), CliError> = (|| {
        if let Sub::VerifyExamples { fixtures: dir } = &cli.command {
            let corpus = match dir {
                Some(d) => fixtures::load_dir(d)?,
                None => fixtures::bundled(),
            };
            let s = settings(cli, None)?;
            report["settings"] = json!({"char": s.field.characteristic()});
            let (results, failed) = fixtures::verify(&corpus, &s);
            let warnings: Vec<String> = failed.iter().map(|f| format!("fixture {f} does not match")).collect();
            return Ok((results, warnings, u8::from(!failed.is_empty())));
        }
        let (command, path) = cli.command.command().expect("problem command");
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
        let prob = ProblemSpec::parse(&text)?;
        report["input_digest"] = json!(prob.digest());
        let s = settings(cli, Some(&prob))?;
        report["settings"] = json!({
            "box": s.initial_box,
            "box_cap": s.box_cap,
            "char": s.field.characteristic(),
        });
        let out = commands::run(command, &prob, &s)?;
        Ok((out.results, out.warnings, 0))
    })();
    let code = match result {
        Ok((results, warnings, code)) => {
            report["results"] = results;
            report["warnings"] = json!(warnings);
            code
        }
        Err(e) => {
            let mut err = json!({"kind": e.kind(), "message": e.to_string()});
            if let CliError::BoxInsufficient { cap, .. } = &e {
                err["cap"] = json!(cap);
            }
            report["error"] = err;
            report["warnings"] = json!([]);
            e.exit_code()
        }
    };
    if cli.timing {
        report["timing_ms"] = json!(started.elapsed().as_millis() as u64);
    }
    (report, code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("locoh: cannot configure {k} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let (report, code) = execute(&cli);
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if let Some(err) = report.get("error") {
        eprintln!("locoh: {}", err["message"].as_str().unwrap_or("error"));
    }
    for w in report["warnings"].as_array().into_iter().flatten() {
        eprintln!("locoh: warning: {}", w.as_str().unwrap_or_default());
    }
    ExitCode::from(code)
}
