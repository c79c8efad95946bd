//! The `hullforge` command line: `analyze`, `search`, `table` and
//! `verify-paper`.
//!
//! Exit codes are 0 on success, 1 when a verification finds a mismatch and
//! 2 for usage, parse and I/O errors. All output is buffered by the caller
//! and written in a deterministic order.

mod analyze;
mod cache;
mod search;
mod table;
mod verify;

pub use analyze::{analyze, AnalysisRecord, OutputFormat};
pub use cache::{CacheEntry, DhCache};
pub use table::{regenerate_table, Method, TableCell, TableOptions};
pub use verify::{verify_fixture, verify_paper, CheckLine, VerifyReport};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::code::CodeError;
use crate::construct::FixtureError;
use crate::eaqecc::EaqeccError;
use crate::matrix_file::ParseError;
use crate::search::SearchError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Eaqecc(#[from] EaqeccError),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error("{0}")]
    Serialize(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hullforge",
    version,
    about = "Quaternary codes with one-dimensional Hermitian hull"
)]
pub struct Cli {
    /// Worker threads; never changes any emitted value.
    #[arg(long, global = true, env = "HULLFORGE_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters, hull and weight distribution of a generator matrix file.
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Add the two EAQECCs of a hull-1 code.
        #[arg(long)]
        eaqecc: bool,
        /// Read symbols as 0 1 2 3 instead of 0 1 w W.
        #[arg(long)]
        digits: bool,
        /// Largest dimension enumerated when computing distances.
        #[arg(long, default_value_t = crate::code::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Best hull-1 [n, k] code: exhaustive for k ≤ 3, randomized otherwise.
    Search {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 1)]
        hull: usize,
        /// For k ≤ 3, certify that no code reaches this distance (or find one).
        #[arg(long)]
        target_d: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Record a found witness in this cache file.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Regenerate the table of largest distances of hull-1 codes.
    Table {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Settle cells with k ≤ 3 up to this length by exhaustive search.
        #[arg(long)]
        exhaustive_up_to: Option<usize>,
        /// Directory receiving dh_table.json, dh_table.csv and dh_cache.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the fixture corpus and the reproducible tables.
    VerifyPaper {
        /// Verify the `*.g4m` files in this directory instead of the embedded corpus.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return 2;
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(cli.command, &mut buffer));
    out.write_all(&buffer)?;
    result
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Result<(), CliError> {
    match command {
        Command::Analyze {
            path,
            format,
            eaqecc,
            digits,
            cap,
        } => analyze::cmd_analyze(&path, format, eaqecc, digits, cap, out),
        Command::Search {
            n,
            k,
            hull,
            target_d,
            seed,
            budget,
            cache,
        } => {
            if hull != 1 {
                return Err(CliError::Usage(format!(
                    "only --hull 1 is supported, got {hull}"
                )));
            }
            search::cmd_search(n, k, target_d, seed, budget, cache.as_deref(), out)
        }
        Command::Table {
            max_n,
            k,
            exhaustive_up_to,
            out: dir,
        } => {
            let options = TableOptions {
                max_n,
                k,
                exhaustive_up_to,
            };
            table::cmd_table(&options, dir.as_deref(), out)
        }
        Command::VerifyPaper { fixtures } => verify::cmd_verify(fixtures.as_deref(), out),
    }
}
