//! File formats, reports and the command implementations behind the
//! `prodbasis` binary.
//!
//! [`run`] executes one parsed command, writing reports to `out` and
//! diagnostics to `diag`, and returns the process exit code.

pub mod basis_file;
pub mod commands;
pub mod decimal;
mod json;
pub mod render;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

pub use basis_file::{load_basis, save_basis, BasisFile, LoadError};
pub use commands::CliError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// Unreadable or malformed input, non-orthonormal states, missing tile metadata.
    pub const FAILURE: u8 = 1;
    /// Construction parameters outside the family's range.
    pub const INVALID_DIMENSION: u8 = 2;
    pub const EXTENDIBLE: u8 = 3;
    /// Verification inconclusive, or unwinding not found within the depth.
    pub const INCONCLUSIVE: u8 = 4;
    /// Bound-entanglement checks need a numerically certified UPB.
    pub const NOT_UPB: u8 = 5;
    pub const INCOMPLETE_BASIS: u8 = 6;
}

#[derive(Debug, Parser)]
#[command(
    name = "prodbasis",
    version,
    about = "Construct, verify and wind product bases"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a GenTiles1, GenTiles2 or grid basis and write it as JSON
    Construct(ConstructArgs),
    /// Check orthonormality and search the complement for product states
    Verify(VerifyArgs),
    /// Draw the tile layout of a basis
    Render(RenderArgs),
    /// PPT and range-criterion checks on the complement state of a UPB
    Boundent(BoundentArgs),
    /// Apply random winding moves to a complete basis
    Wind(WindArgs),
    /// Search for a certified sequence of moves back to a grid basis
    Unwind(UnwindArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gentiles1,
    Gentiles2,
    Cartesian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// GenTiles2: number of columns; cartesian: dA
    #[arg(long)]
    pub m: Option<usize>,
    /// GenTiles1/GenTiles2: grid size; cartesian: dB
    #[arg(long)]
    pub n: Option<usize>,
    /// Output file (the JSON goes to stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// See-saw restarts
    #[arg(long, default_value_t = 500)]
    pub restarts: usize,
    #[arg(long, env = "PB_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub path: PathBuf,
    #[command(flatten)]
    pub search: SearchArgs,
    /// UPB margin: overlaps below 1 - tol count as unextendible
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub path: PathBuf,
}

#[derive(Debug, Args)]
pub struct BoundentArgs {
    pub path: PathBuf,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Also write the density matrix as JSON
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["path", "cartesian"])))]
pub struct WindArgs {
    pub path: Option<PathBuf>,
    /// Start from the dA x dB grid basis
    #[arg(long, num_args = 2, value_names = ["DA", "DB"])]
    pub cartesian: Option<Vec<usize>>,
    #[arg(long, default_value_t = 1)]
    pub moves: usize,
    #[arg(long, env = "PB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Output file (the JSON goes to stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct UnwindArgs {
    pub path: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
    /// Also write the unwound basis
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

pub fn run(cli: Cli, out: &mut dyn Write, diag: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Construct(args) => commands::construct(&args, out, diag),
        Command::Verify(args) => commands::verify(&args, out),
        Command::Render(args) => commands::render(&args, out),
        Command::Boundent(args) => commands::boundent(&args, out, diag),
        Command::Wind(args) => commands::wind(&args, out, diag),
        Command::Unwind(args) => commands::unwind(&args, out, diag),
    }
}

/// Parse `argv` and run, folding errors into an exit code and a message on `diag`.
pub fn run_from<I, T>(argv: I, out: &mut dyn Write, diag: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(diag, "{}", e.render());
            return if e.use_stderr() {
                exit::INVALID_DIMENSION
            } else {
                exit::OK
            };
        }
    };
    match run(cli, out, diag) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(diag, "error: {}", e.message);
            e.code
        }
    }
}
