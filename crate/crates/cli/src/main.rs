//! `ghull`: construct and verify MDS (extended) GRS codes with a
//! prescribed Galois hull dimension.
//!
//! Exit codes: 0 success (and, for `construct`, oracle agreement),
//! 2 malformed input, 3 violated construction hypothesis, 4 oracle
//! disagreement (a verified hull dimension differing from the request —
//! never expected).

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use galois_hulls::Error as CoreError;

#[derive(Parser)]
#[command(name = "ghull", version, about = "Galois-hull GRS code toolkit")]
struct Cli {
    /// Worker threads for enumeration-heavy verification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction request (JSON) and verify the hull dimension.
    ///
    /// The request names a method ("theorem_a", "theorem_b" or
    /// "theorem_c"), the field, the method parameters, and the target
    /// (k, l, e_prime, extended). The result is a RunReport JSON on
    /// stdout; the exit code is 0 only if the verified hull dimension
    /// equals the requested l.
    Construct {
        /// Request file; omitted or "-" reads stdin.
        file: Option<String>,
    },
    /// Verify a GRS spec JSON: hull dimension, self-orthogonality (with
    /// the recovered certificate), and MDS verdict at parameter e.
    Verify {
        /// Spec file; omitted or "-" reads stdin (unless --random).
        file: Option<String>,
        /// Galois parameter.
        #[arg(long)]
        e: u32,
        /// Generate a random spec "n,k" instead of reading one.
        #[arg(long, value_name = "N,K")]
        random: Option<String>,
        /// Field for --random: "p,h" or "p,h,c_h,...,c_0".
        #[arg(long, value_name = "P,H[,MOD]")]
        field: Option<String>,
        /// Make the random spec extended.
        #[arg(long)]
        extended: bool,
        /// RNG seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension-bound tables, with the Hermitian-cap comparison when h
    /// is even.
    Bounds {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long)]
        n: Option<u64>,
        /// Certificate degree deg h(x).
        #[arg(long, default_value_t = 0)]
        deg_h: u64,
        /// Galois parameters to tabulate, comma separated.
        #[arg(long, value_delimiter = ',')]
        e_prime: Vec<u32>,
        /// Emit a frozen reference table: "example1" or "example5".
        #[arg(long)]
        reproduce: Option<String>,
        /// CSV output.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// JSON output.
        #[arg(long)]
        json: bool,
    },
    /// Stream admissible parameter families (classes 1-6) as CSV.
    Enumerate {
        /// Family class: 1/2 rescaled seeds (plain/extended), 3/4
        /// Hermitian seeds, 5/6 coset point sets.
        #[arg(long)]
        class: u32,
        /// Upper bound on the field size q = p^h.
        #[arg(long)]
        q_bound: u64,
    },
    /// Emit a frozen reference bound table ("example1" or "example5").
    Reproduce {
        which: String,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let result = match cli.command {
        Command::Construct { file } => commands::construct::run(file.as_deref()),
        Command::Verify {
            file,
            e,
            random,
            field,
            extended,
            seed,
        } => commands::verify::run(
            file.as_deref(),
            e,
            random.as_deref(),
            field.as_deref(),
            extended,
            seed,
        ),
        Command::Bounds {
            p,
            h,
            n,
            deg_h,
            e_prime,
            reproduce,
            csv,
            json,
        } => commands::bounds::run(p, h, n, deg_h, &e_prime, reproduce.as_deref(), csv, json),
        Command::Enumerate { class, q_bound } => commands::enumerate::run(class, q_bound),
        Command::Reproduce { which, csv, json } => {
            commands::bounds::run_reproduce(&which, csv, json)
        }
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

/// CLI failure taxonomy.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input (JSON syntax, bad flags, unreadable files): exit 2.
    Parse(String),
    /// A construction hypothesis or input invariant failed: exit 3.
    Hypothesis(String),
    /// Anything else: exit 1.
    Other(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Hypothesis(m) | CliError::Other(m) => write!(f, "{m}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Parse(_) => CliError::Parse(e.to_string()),
            CoreError::Hypothesis(_)
            | CoreError::InvalidParameter(_)
            | CoreError::NotSelfOrthogonal { .. }
            | CoreError::NotPrime(_)
            | CoreError::BadDegree
            | CoreError::BadModulus { .. }
            | CoreError::ReducibleModulus { .. }
            | CoreError::TableLimit { .. }
            | CoreError::NoRoot { .. }
            | CoreError::TooLarge(_)
            | CoreError::DimensionMismatch(_)
            | CoreError::SpecMismatch => CliError::Hypothesis(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn classify(err: &CliError) -> u8 {
    match err {
        CliError::Parse(_) => 2,
        CliError::Hypothesis(_) => 3,
        CliError::Other(_) => 1,
    }
}

pub type CliResult<T> = Result<T, CliError>;
