use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

/// Free group words, reduction sequences and the moves between them.
///
/// Words are whitespace separated generators; a trailing apostrophe marks an
/// inverse, e.g. "a a' b c c' b'". Sequences are redex positions, e.g. "3,0,0".
#[derive(Parser, Debug)]
#[command(name = "freegroup", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print machine-readable JSON
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a word
    Nf { word: String },
    /// Product of two words, normalized
    Mul { left: String, right: String },
    /// Inverse of a word, normalized
    Inv { word: String },
    /// Decide equality in the free group (exit 0 equal, 1 unequal, 2 error)
    Eq { left: String, right: String },
    /// Exponent sum per generator, as JSON
    Abel { word: String },
    /// Run a reduction sequence, or reduce to normal form if none is given
    Reduce {
        word: Option<String>,
        sequence: Option<String>,
        /// Read {"word": ..., "steps": [...]} from this file ("-" for stdin)
        #[arg(long, conflicts_with_all = ["word", "sequence"])]
        input: Option<String>,
        /// Without a sequence, also print the witnessing reduction trace
        #[arg(long)]
        trace: bool,
    },
    /// List every reduction sequence of a word
    Sequences {
        word: String,
        #[arg(long, default_value_t = freegroup::oracle::DEFAULT_MAX_LEN)]
        max_len: usize,
    },
    /// Chain of moves turning one reduction sequence into another
    Connect {
        word: String,
        from: String,
        to: String,
        /// Print the full replay trace as JSON
        #[arg(long)]
        trace: bool,
    },
    /// Move graph of a word
    Graph {
        word: String,
        /// Emit Graphviz DOT
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = freegroup::oracle::DEFAULT_MAX_LEN)]
        max_len: usize,
    },
    /// Verify move-graph connectivity and the transformation algorithms
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Comma-separated generator names
    #[arg(long, value_delimiter = ',', required = true)]
    pub alphabet: Vec<String>,
    #[arg(long)]
    pub max_len: usize,
    /// Check every reducible word up to the maximum length
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Check this many random reducible words instead
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Disable the parallel fan-out
    #[arg(long)]
    pub sequential: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, cli.json) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
