//! `finring`: build, inspect and audit finite commutative rings.

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "finring", version, about = "Finite commutative rings: structure, subrings and audits")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Largest ring (in elements) on which exhaustive censuses run.
    #[arg(long, global = true, env = "FINRING_ORACLE_BOUND", default_value_t = finring::DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a ring from a preset and write its JSON description.
    Make {
        /// Preset name followed by its parameters, e.g. `galois 2 2 2`.
        #[arg(required = true, num_args = 1..)]
        preset: Vec<String>,
    },
    /// Print the invariants and maximal-subring counts of a ring.
    Info {
        /// Ring JSON file or preset expression, e.g. `galois 2 2 2`.
        #[arg(required = true, num_args = 1..)]
        ring: Vec<String>,
    },
    /// List subrings.
    Subrings {
        #[arg(required = true, num_args = 1..)]
        ring: Vec<String>,
        /// Maximal subrings only (the default).
        #[arg(long, conflicts_with = "all")]
        maximal: bool,
        /// Every subring, from the exhaustive census.
        #[arg(long)]
        all: bool,
        /// Cross-check against the exhaustive census.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the verification suite on a ring or on the built-in catalog.
    Audit {
        #[arg(num_args = 1.., required_unless_present = "catalog", conflicts_with = "catalog")]
        ring: Vec<String>,
        #[arg(long)]
        catalog: bool,
    },
    /// Split a ring into primary components and local factors.
    Decompose {
        #[arg(required = true, num_args = 1..)]
        ring: Vec<String>,
    },
    /// Numerical invariants of a local ring.
    Localdata {
        #[arg(required = true, num_args = 1..)]
        ring: Vec<String>,
    },
    /// Teichmüller set of a local ring.
    Teichmuller {
        #[arg(required = true, num_args = 1..)]
        ring: Vec<String>,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Make { preset } => commands::make(g, &preset),
        Command::Info { ring } => commands::info(g, &ring),
        Command::Subrings { ring, all, oracle, .. } => commands::subrings(g, &ring, all, oracle),
        Command::Audit { ring, catalog } => commands::audit(g, &ring, catalog),
        Command::Decompose { ring } => commands::decompose(g, &ring),
        Command::Localdata { ring } => commands::localdata(g, &ring),
        Command::Teichmuller { ring } => commands::teichmuller(g, &ring),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { error::INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
