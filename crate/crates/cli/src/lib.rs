//! `cube-spectra`: command-line access to the spectral toolkit, the text
//! family and vector formats, and the committed golden tables.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod formats;
pub mod goldens;
pub mod report;
pub mod selftest;

use report::Format;

pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug)]
pub enum CliError {
    /// Bad input or violated precondition.
    Input(String),
    /// The search budget ran out before the search space was exhausted.
    Budget(String),
    /// The command ran but its check did not pass.
    Failed(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_PRECONDITION,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Failed(_) => EXIT_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Budget(m) | CliError::Failed(m) => f.write_str(m),
        }
    }
}

impl From<cube_spectra_core::Error> for CliError {
    fn from(e: cube_spectra_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

/// A report plus the verdict of the command's own check. The report is
/// printed either way.
#[derive(Debug)]
pub struct Outcome {
    pub report: serde_json::Value,
    pub verdict: Result<(), CliError>,
}

impl From<serde_json::Value> for Outcome {
    fn from(report: serde_json::Value) -> Self {
        Outcome { report, verdict: Ok(()) }
    }
}

#[derive(Parser, Debug)]
#[command(name = "cube-spectra", version, about = "Largest eigenvalues of induced subgraphs of the hypercube")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// λ₁ of the family in a file.
    Lambda1(commands::Lambda1Args),
    /// Exact values, bounds and limit constants for Hamming balls.
    Hamming(commands::HammingArgs),
    /// Classical and walk-count bounds for the family in a file.
    Bounds(commands::FamilyArgs),
    /// Fully compress a family or weight vector.
    Compress(commands::CompressArgs),
    /// Count subcubes in a family or an initial segment.
    CountCubes(commands::CountCubesArgs),
    /// Exact maximum of λ₁ over n-vertex induced subgraphs of Q_d.
    Search(commands::SearchArgs),
    /// Build and verify the heavy-vertex partition certificate.
    Partition(commands::PartitionArgs),
    /// Regenerate or check the golden tables.
    RegenGoldens(goldens::RegenArgs),
    /// Seeded randomized invariant checks.
    Selftest(selftest::SelftestArgs),
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("CUBE_SPECTRA_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::input(format!("CUBE_SPECTRA_THREADS must be a positive integer, got `{value}`")))?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Lambda1(a) => commands::lambda1(a),
        Command::Hamming(a) => commands::hamming(a),
        Command::Bounds(a) => commands::bounds(a),
        Command::Compress(a) => commands::compress(a),
        Command::CountCubes(a) => commands::count_cubes(a),
        Command::Search(a) => commands::search(a),
        Command::Partition(a) => commands::partition(a),
        Command::RegenGoldens(a) => goldens::regen(a),
        Command::Selftest(a) => selftest::run(a, g.seed),
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status. A report is printed even when the command's check fails.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    if let Err(e) = emit(&report::render(&outcome.report, cli.global.format), cli.global.output.as_ref()) {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    match outcome.verdict {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
