//! `hopfmu` — exact trace invariants of the antipode on simple modules of
//! u_q(sl2) and of H_n(1,q), from the command line.
//!
//! Subcommands: `table` (one row per simple module), `mu` (a single
//! invariant), `inspect` (matrices, Q, U, and form checks for one module),
//! and `verify` (exact property suites usable as a CI gate). Exit codes:
//! 0 on success, 1 when a verified property fails, 2 on usage errors.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfmu::QContext;

/// Order bounds shared by every subcommand; chosen so that all suites run
/// in seconds to minutes with exact arithmetic.
const MIN_ORDER: u64 = 3;
const MAX_ORDER: u64 = 13;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unsupported parameter ranges (exit 2).
    Usage(String),
    /// A verified property failed (exit 1).
    Failure(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Engine laws, plus the uq and double suites (uq skipped for even n).
    All,
    /// Engine-level laws on a fixed probe set of modules.
    Core,
    /// Closed forms and matrix facts for u_q(sl2); odd n only.
    Uq,
    /// Label theorems plus trace-invariant checks for H_n(1,q^2).
    Double,
    /// Label theorems of H_n(1,q) only (works for every n).
    DoubleLabels,
}

#[derive(Parser)]
#[command(name = "hopfmu", version, about = "Exact antipode trace invariants for u_q(sl2) and H_n(1,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate every simple module at order n
    Table {
        #[command(subcommand)]
        algebra: TableTarget,
    },
    /// Print the trace invariant of one module
    Mu {
        #[command(subcommand)]
        module: ModuleTarget,
    },
    /// Show matrices, Q, U, and bilinear-form checks for one module
    Inspect {
        #[command(subcommand)]
        module: ModuleTarget,
    },
    /// Run exact property suites; nonzero exit on any violation
    Verify {
        /// Order of the root of unity (3..=13)
        #[arg(long)]
        n: u64,
        /// Exponent e of the root q = zeta_n^e (coprime to n)
        #[arg(long, default_value_t = 1)]
        exp: i64,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum TableTarget {
    /// u_q(sl2) at q = zeta_n^exp: V_0..V_{n-2} and V(q^-1); odd n only
    Uq {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        exp: i64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// H_n(1,q) at q = zeta_n^exp: all V(l,r), 1 <= l,r <= n
    Double {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        exp: i64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ModuleTarget {
    /// Simple u_q(sl2)-module V_i (i = n-1 selects V(q^-1)); odd n only
    Uq {
        /// Highest-weight index, 0 <= i <= n-1
        #[arg(long)]
        i: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        exp: i64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Simple H_n(1,q)-module V(l,r)
    Double {
        /// Dimension, 1 <= l <= n
        #[arg(long)]
        l: u64,
        /// Weight; any integer, reduced mod n into 1..=n
        #[arg(long)]
        r: i64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        exp: i64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

/// Validated context for q = zeta_n^exp.
pub fn context(n: u64, exp: i64) -> Result<QContext, CliError> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(CliError::Usage(format!(
            "order n = {n} is outside the supported range {MIN_ORDER}..={MAX_ORDER}"
        )));
    }
    QContext::new(n, exp).map_err(|e| CliError::Usage(e.to_string()))
}

/// Contexts for the uq family additionally require odd order.
pub fn uq_context(n: u64, exp: i64) -> Result<QContext, CliError> {
    if n % 2 == 0 {
        return Err(CliError::Usage(format!(
            "u_q(sl2) needs an odd order so that q^2 is primitive; n = {n} is even"
        )));
    }
    context(n, exp)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Table { algebra } => match algebra {
            TableTarget::Uq { n, exp, format } => commands::table_uq(n, exp, format),
            TableTarget::Double { n, exp, format } => commands::table_double(n, exp, format),
        },
        Command::Mu { module } => match module {
            ModuleTarget::Uq { i, n, exp, format } => commands::mu_uq(i, n, exp, format),
            ModuleTarget::Double { l, r, n, exp, format } => {
                commands::mu_double(l, r, n, exp, format)
            }
        },
        Command::Inspect { module } => match module {
            ModuleTarget::Uq { i, n, exp, format } => commands::inspect_uq(i, n, exp, format),
            ModuleTarget::Double { l, r, n, exp, format } => {
                commands::inspect_double(l, r, n, exp, format)
            }
        },
        Command::Verify { n, exp, suite } => verify::run(n, exp, suite),
    }
}

fn main() -> ExitCode {
    // Die quietly when the reader goes away (`hopfmu table ... | head`)
    // instead of panicking on the broken pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
