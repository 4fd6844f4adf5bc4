//! `bud`: enumerate, inspect and check bud generating systems.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bud", version, about = "Bud generating systems: languages, series, graphs and verdicts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of elements of the language (or synchronous language) of each arity 1..N.
    Enumerate {
        #[command(flatten)]
        run: RunArgs,
        /// Count the synchronous language.
        #[arg(long)]
        sync: bool,
    },
    /// Dump the hook, syntactic or synchronous generating series.
    Series {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Kind::Synt)]
        kind: Kind,
    },
    /// Color-type table `color,type,coefficient` of the syntactic or synchronous series.
    Colt {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Kind::Synt)]
        kind: Kind,
    },
    /// Derivation graph (or synchronous derivation graph) up to arity N.
    Graph {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        sync: bool,
    },
    /// Finitely factorizing check and faithfulness/unambiguity verdicts up to arity N.
    Check {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Compile a grammar file (.cfg, .rtg or .sg) into a system in JSON.
    Compile {
        /// Grammar file; its kind is taken from the extension.
        file: std::path::PathBuf,
        /// Largest node arity of the tree operad for synchronous grammars
        /// (default: the widest node of the rules).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// List the builtin systems.
    Presets,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// System file in JSON.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    system: Option<std::path::PathBuf>,
    /// Builtin system (see `bud presets`).
    #[arg(long)]
    builtin: Option<String>,
    /// γ for bdias.
    #[arg(long)]
    gamma: Option<u8>,
    /// Arity set for btree, such as 2,3,4.
    #[arg(long, value_delimiter = ',')]
    arities: Option<Vec<usize>>,
    /// Largest arity considered.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    max_arity: u32,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Hook,
    Synt,
    Sync,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Dot,
    Bfile,
}

/// What went wrong, and the exit code it maps to.
enum Failure {
    /// Unreadable or invalid input: exit code 1.
    Input(anyhow::Error),
    /// A computation that would not terminate: exit code 2.
    Divergence(anyhow::Error),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Divergence(e)) => {
            eprintln!("divergence: {e:#}");
            ExitCode::from(2)
        }
    }
}
