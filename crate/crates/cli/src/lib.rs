//! The `arith` command-line tool.
//!
//! Every subcommand writes to standard output. Exit codes: 0 on success,
//! 1 when input fails validation or a check fails, 2 on usage errors.
//! `ARITH_THREADS` caps the worker pool.

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

pub mod bijection;
pub mod cache;
pub mod commands;
pub mod output;
pub mod verify;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] arith_core::Error),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "arith", version, about = "Arithmetical structures on paths and cycles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Paths,
    Cycles,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Paths => "paths",
            Family::Cycles => "cycles",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum CountKey {
    /// number of entries of r equal to 1
    #[default]
    R1,
    /// sum of d
    Dsum,
    /// value of d at --position
    DEntry,
    /// number of d entries equal to 1, among structures with r(1) = 2
    DOnes,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count tables, closed form where one is known
    Count(CountArgs),
    /// Stream every structure on P_n or C_n
    Enumerate(EnumerateArgs),
    /// Subdivide, smooth or rotate a structure read from stdin
    Transform(TransformArgs),
    /// Bijections between structures and combinatorial objects
    Bijection(BijectionArgs),
    /// Critical group of a structure read from stdin
    CriticalGroup,
    /// Brute-force searches independent of the enumerators
    Oracle(OracleArgs),
    /// Run the named theorem checks
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub family: Family,
    pub n: usize,
    #[arg(long, value_enum, default_value_t)]
    pub by: CountKey,
    /// 1-based vertex for `--by d-entry`
    #[arg(long, default_value_t = 1)]
    pub position: usize,
    /// count by enumeration even when a closed form exists
    #[arg(long)]
    pub enumerate: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub family: Family,
    pub n: usize,
    /// keep only structures with this many entries of r equal to 1
    #[arg(long)]
    pub r1: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TransformArgs {
    #[arg(long)]
    pub subdivide: Option<usize>,
    #[arg(long)]
    pub smooth: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub rotate: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BijectionMode {
    Plan,
    Word,
    FriezeRotate,
    Triangulation,
    Multiset,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    pub mode: BijectionMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleTarget {
    Paths,
    Cycles,
    Star,
    General,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub target: OracleTarget,
    /// vertex count for paths and cycles, leaf count for stars
    pub n: Option<usize>,
    /// bound on entries of r (paths and cycles)
    #[arg(long)]
    pub bound: Option<u64>,
    /// node budget for the star search
    #[arg(long, default_value_t = 50_000_000)]
    pub cap: u64,
    /// largest r entry tried on a general graph
    #[arg(long, default_value_t = 6)]
    pub r_max: u64,
    /// largest number of candidate vectors for a general graph
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u128,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    pub paths: usize,
    #[arg(long, default_value_t = 8)]
    pub cycles: usize,
    /// run a single named check
    #[arg(long)]
    pub only: Option<String>,
    /// JSON-lines file of structures to validate as the `structures` check
    #[arg(long)]
    pub structures: Option<PathBuf>,
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code. Diagnostics go to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    configure_threads();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = dispatch(cli.command, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match res {
        Ok(()) => 0,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("arith: {e}");
            e.exit_code()
        }
    }
}

fn configure_threads() {
    let Ok(v) = std::env::var("ARITH_THREADS") else { return };
    match v.trim().parse::<usize>() {
        Ok(k) if k > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
        _ => eprintln!("arith: ignoring ARITH_THREADS={v:?}"),
    }
}

pub fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Count(a) => commands::count(&a, out),
        Command::Enumerate(a) => commands::enumerate(&a, out),
        Command::Transform(a) => commands::transform(&a, &read_stdin_json()?, out),
        Command::Bijection(a) => bijection::run(a.mode, &read_stdin_json()?, out),
        Command::CriticalGroup => commands::critical_group(&read_stdin_json()?, out),
        Command::Oracle(a) => commands::oracle(&a, out),
        Command::Verify(a) => verify::run(&a, out),
    }
}

pub fn read_stdin_json() -> CliResult<Value> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(serde_json::from_str(&text)?)
}
