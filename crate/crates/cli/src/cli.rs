use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{self, BuildOp, Output, Settings};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "morita", version, about = "Exact verification for group-graded algebras and bimodules")]
pub struct Cli {
    /// Seed for every randomized certificate search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random candidates per search before giving up as not certified.
    #[arg(long, global = true, default_value_t = 64)]
    pub trials: usize,
    /// Worker threads; defaults to one per core. Results do not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a document and everything it references.
    Check { path: PathBuf },
    /// Build a tensor product, wreath product, dual, balanced tensor product or opposite algebra.
    Build {
        #[arg(value_enum)]
        op: Op,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Arity of a wreath product.
        #[arg(long)]
        n: Option<usize>,
        /// Write the document here and print a report instead.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify that a bimodule is invertible.
    VerifyMorita { path: PathBuf },
    /// Compare F[G] ≀ Sₙ with F[G ≀ Sₙ] entry by entry.
    Oracle {
        group: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Refuse instances whose dimension cubed exceeds this.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u128,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Tensor,
    Wreath,
    Dual,
    TensorOver,
    Opposite,
}

impl From<Op> for BuildOp {
    fn from(op: Op) -> Self {
        match op {
            Op::Tensor => BuildOp::Tensor,
            Op::Wreath => BuildOp::Wreath,
            Op::Dual => BuildOp::Dual,
            Op::TensorOver => BuildOp::TensorOver,
            Op::Opposite => BuildOp::Opposite,
        }
    }
}

/// Runs a parsed command line on the current rayon pool. `jobs` is the
/// caller's business, since the global pool can only be set once.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let settings = Settings {
        seed: cli.seed,
        trials: cli.trials,
        json: cli.json,
    };
    match &cli.command {
        Command::Check { path } => commands::check(path, &settings),
        Command::Build { op, inputs, n, output } => {
            commands::build((*op).into(), inputs, *n, output.as_deref(), &settings)
        }
        Command::VerifyMorita { path } => commands::verify_morita_cmd(path, &settings),
        Command::Oracle { group, n, field, budget } => commands::oracle(group, *n, field, *budget, &settings),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn global_flags_after_the_subcommand() {
        let cli = Cli::try_parse_from(["morita", "build", "wreath", "a.json", "--n", "2", "--seed", "9", "--json"]).unwrap();
        assert_eq!(cli.seed, 9);
        assert!(cli.json);
        assert!(matches!(cli.command, Command::Build { op: Op::Wreath, n: Some(2), .. }));
    }
}
