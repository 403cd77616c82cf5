//! Command-line front end for `chainrep`: set-function documents, command
//! dispatch, run records and report rendering.

pub mod commands;
pub mod document;
pub mod golden;
pub mod record;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{run, CliError, Outcome};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const NEGATIVE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const STEP_CAP: u8 = 3;
    pub const INCONSISTENT: u8 = 4;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// Exact computations on set functions over small ground sets.
///
/// Exit codes: 0 success, 1 negative finding (e.g. not submodular),
/// 2 input error, 3 step cap reached, 4 internal inconsistency.
#[derive(Debug, Parser)]
#[command(name = "chainrep", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Do not append a run record under the data directory
    /// (`$CHAINREP_DATA_DIR` by default).
    #[arg(long, global = true)]
    pub no_persist: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monotonicity, submodularity and the four equivalent conditions.
    Check { file: PathBuf },
    /// Iterate the sup-over-chains recursion until a fixed point.
    Iterate {
        file: PathBuf,
        /// Maximum number of recursion steps (default 2^m).
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Reproduce the built-in m = 4 table and diff it against the expected values.
    ReproTable {
        /// Perturb one expected cell to exercise the mismatch path.
        #[arg(long)]
        self_test: bool,
    },
    /// Choquet integral of a function given per element.
    Choquet {
        file: PathBuf,
        /// Comma-separated rational values, one per ground-set element.
        #[arg(long = "f", value_name = "VALUES", allow_hyphen_values = true)]
        f: String,
        /// Also print the risk measure v(−f)/v(Ω).
        #[arg(long)]
        risk: bool,
        /// Also compute the supremum over chain measures (needs submodular v).
        #[arg(long)]
        sup: bool,
        /// Print the chain attaining the value.
        #[arg(long)]
        witness: bool,
    },
    /// Distribution, Kusuoka measure and spectral formulas on a weighted space.
    Spectral {
        file: PathBuf,
        /// Nonnegative function values (default: the density).
        #[arg(long = "f", value_name = "VALUES")]
        f: Option<String>,
    },
    /// Report of the four equivalent conditions with failure witnesses.
    Represent {
        file: PathBuf,
        /// Check the supermodular conditions instead.
        #[arg(long)]
        supermodular: bool,
    },
    /// Emit the dual set function A ↦ v(Ω) − v(Aᶜ) as a document.
    Dual { file: PathBuf },
}
