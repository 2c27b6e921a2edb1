//! `biderlab` command-line tool.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "biderlab",
    version,
    about = "Exact biderivation spaces and Jordan biderivation decompositions"
)]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Add wall-clock time per stage to the report.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

/// An algebra file, or `preset:<spec>` such as `preset:upper:3`.
#[derive(Debug, Args)]
struct AlgebraArg {
    #[arg(value_name = "ALGEBRA", required_unless_present = "algebra")]
    path: Option<String>,

    #[arg(long = "algebra", value_name = "ALGEBRA", conflicts_with = "path")]
    algebra: Option<String>,
}

impl AlgebraArg {
    fn source(&self) -> &str {
        self.path
            .as_deref()
            .or(self.algebra.as_deref())
            .expect("clap requires one")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Bider,
    Antibider,
    JordanBider,
    FBider,
    FDer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Literal,
    Adjusted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Identities,
    Decomposition,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check associativity and the unity law.
    Validate {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Dimension, basis and center of an algebra.
    Info {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Solve for the space of maps of one kind.
    Spaces {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Polynomial file, or one of product, jordan, lie, jordan-triple, lie-triple.
        #[arg(long, value_name = "POLY")]
        poly: Option<String>,
        /// Also write each basis map to DIR as a map file.
        #[arg(long, value_name = "DIR")]
        export_basis: Option<PathBuf>,
    },
    /// Evaluate structural hypotheses for an idempotent.
    Check {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Comma-separated rational coordinates of the idempotent.
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        idempotent: String,
        /// Comma-separated hypothesis names, or `all`.
        #[arg(long, default_value = "all")]
        hypotheses: String,
    },
    /// Decompose one Jordan biderivation or every basis map of the Jordan space.
    Decompose {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        idempotent: String,
        #[arg(long, value_name = "FILE", conflicts_with = "all_basis")]
        map: Option<PathBuf>,
        /// Decompose every basis map of the Jordan biderivation space (the default).
        #[arg(long)]
        all_basis: bool,
        #[arg(long, value_enum, default_value = "literal")]
        mode: ModeArg,
    },
    /// Run identity suites and the decomposition pipeline.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        idempotent: String,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Random samples per sampled identity.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = biderlab::rng::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "literal")]
        mode: ModeArg,
    },
    /// Write a built-in algebra as an algebra file.
    Export {
        /// `matrix:N`, `upper:N`, `block:S1,S2,...` or `one`.
        preset: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
