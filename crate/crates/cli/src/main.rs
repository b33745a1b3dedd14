mod commands;
mod record;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "ordpath", version, about = "Induced paths in Hamiltonian-path graphs avoiding ordered patterns")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Output format; tables default to csv, single results to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for the parallel oracles [env: ORDPATH_THREADS].
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    /// Also write the full run record (inputs, parameters, payload) as JSON.
    #[arg(long, global = true)]
    pub record: Option<PathBuf>,
    /// Report every elapsed time as 0 so records compare byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Generate a host or pattern file.
    Gen(commands::GenArgs),
    /// Pattern algebra, containment and the shipped catalog.
    Pattern(commands::PatternArgs),
    /// Structural predicates and growth class of a pattern.
    Classify(commands::ClassifyArgs),
    /// Run an extraction procedure on a host.
    Solve(commands::SolveArgs),
    /// Exact longest paths, K_{t,t} detection and Ramsey towers.
    Oracle(commands::OracleArgs),
    /// Exact g_H(n) by enumerating every host on n vertices.
    Ghn(commands::GhnArgs),
    /// Path or half-graph from the 4-uniform path-pair coloring.
    Grs(commands::GrsArgs),
    /// Increasing induced path or K_{t,t}, with the stage reached.
    MainThm(commands::MainThmArgs),
    /// Run a property suite.
    Verify(commands::VerifyArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gen(_) => "gen",
            Command::Pattern(_) => "pattern",
            Command::Classify(_) => "classify",
            Command::Solve(_) => "solve",
            Command::Oracle(_) => "oracle",
            Command::Ghn(_) => "ghn",
            Command::Grs(_) => "grs",
            Command::MainThm(_) => "main-thm",
            Command::Verify(_) => "verify",
        }
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Fail {
    pub code: u8,
    pub msg: String,
}

impl Fail {
    pub fn usage(msg: impl Into<String>) -> Self {
        Fail { code: 2, msg: msg.into() }
    }

    pub fn cap(msg: impl Into<String>) -> Self {
        Fail { code: 3, msg: msg.into() }
    }

    pub fn property(msg: impl Into<String>) -> Self {
        Fail { code: 1, msg: msg.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match record::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("ordpath {}: {}", cli.command.name(), f.msg);
            ExitCode::from(f.code)
        }
    }
}
