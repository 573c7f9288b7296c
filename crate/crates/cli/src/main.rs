//! `icdfa`: canonical strings for initially connected DFAs from the shell.
//!
//! Standard output carries only machine-readable results; warnings and
//! summaries go to standard error. Exit status is 0 on success, 1 for a
//! negative verdict (not isomorphic, verification mismatch) and 2 for usage
//! or input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "icdfa",
    version,
    about = "Canonical strings, generation and counting of initially connected DFAs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the number of non-isomorphic initially connected structures.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = CountMode::Exact)]
        mode: CountMode,
        /// Also report the agreement of all counting routes on stderr.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Stream every canonical string of a shape in lexicographic order.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Stop after this many strings.
        #[arg(long)]
        limit: Option<u64>,
        /// Resume after this string (a line as printed by `gen`).
        #[arg(long)]
        from: Option<String>,
        /// Worker threads; the output is identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the normal form of an automaton document.
    Canon {
        path: PathBuf,
        /// Also print the original-to-canonical state map.
        #[arg(long)]
        mapping: bool,
        /// Fail instead of dropping unreachable states.
        #[arg(long)]
        strict: bool,
    },
    /// Decide whether two automaton documents are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Print the lexicographic rank of each string (argument or stdin lines).
    Rank { line: Option<String> },
    /// Print the string of a given rank.
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: String,
    },
    /// Draw canonical strings uniformly at random.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Cross-check generator, formulas and brute force for one shape.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Largest number of transition functions the brute force may visit.
        #[arg(long, default_value_t = commands::VERIFY_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountMode {
    Exact,
    Liskovets,
    Bound,
    WithFinals,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count {
            n,
            k,
            mode,
            verbose,
        } => commands::count(n, k, mode, verbose),
        Command::Gen {
            n,
            k,
            limit,
            from,
            jobs,
        } => commands::gen(n, k, limit, from.as_deref(), jobs),
        Command::Canon {
            path,
            mapping,
            strict,
        } => commands::canon(&path, mapping, strict),
        Command::Iso { a, b } => commands::iso(&a, &b),
        Command::Rank { line } => commands::rank(line.as_deref()),
        Command::Unrank { n, k, r } => commands::unrank(n, k, &r),
        Command::Sample { n, k, seed, count } => commands::sample(n, k, seed, count),
        Command::Verify { n, k, budget } => commands::verify(n, k, budget),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
