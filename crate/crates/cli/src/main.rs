use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use trapgraph_cli::bench::Selection;
use trapgraph_cli::verify::Fault;
use trapgraph_cli::Error;

/// Independent sets, vertex covers and matchings on trapezoid graphs.
#[derive(Debug, Parser)]
#[command(name = "trapgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a random diagram of N trapezoids.
    Gen {
        n: usize,
        /// Output file; standard output when omitted.
        path: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, conflicts_with = "path")]
        out: Option<PathBuf>,
    },
    /// Independence number, set counts and vertex-cover counts of a diagram.
    Analyze {
        input: PathBuf,
        /// Also print the independence polynomial coefficients s_0 .. s_alpha.
        #[arg(long)]
        polynomial: bool,
        /// Also print a maximum independent set and a minimum vertex cover.
        #[arg(long)]
        witness: bool,
    },
    /// Run the right-spread greedy matching.
    Matching {
        input: PathBuf,
        /// Compare against an exact maximum matching.
        #[arg(long)]
        audit: bool,
    },
    /// Write the greedy-matching counterexample with K extra gadgets.
    Counterexample {
        k: usize,
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        out: Option<PathBuf>,
    },
    /// Compare every fast algorithm with exhaustive enumeration on random diagrams.
    Verify {
        /// Diagrams per size.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Sizes 1..=N are checked.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Time the sweep algorithms against the quadratic baselines.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [1024, 2048, 4096, 8192, 16384])]
        sizes: Vec<usize>,
        /// sweep, quadratic or both.
        #[arg(long, default_value = "both")]
        algo: Selection,
        /// Timed runs per size; the median is reported.
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn dispatch(command: Command) -> Result<String, Error> {
    match command {
        Command::Gen { n, path, seed, out } => trapgraph_cli::gen(n, seed, out.or(path).as_deref()),
        Command::Analyze {
            input,
            polynomial,
            witness,
        } => trapgraph_cli::analyze(&input, polynomial, witness),
        Command::Matching { input, audit } => trapgraph_cli::matching(&input, audit),
        Command::Counterexample { k, path, out } => {
            trapgraph_cli::counterexample(k, out.or(path).as_deref())
        }
        Command::Verify {
            trials,
            max_n,
            seed,
            inject_fault,
        } => {
            let fault = if inject_fault {
                Fault::FlipAlphaComparison
            } else {
                Fault::None
            };
            trapgraph_cli::verify(trials, max_n, seed, fault)
        }
        Command::Bench {
            sizes,
            algo,
            runs,
            seed,
        } => trapgraph_cli::bench(&sizes, algo, runs, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors share code 1 with bad input; 2 is reserved for mismatches.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
