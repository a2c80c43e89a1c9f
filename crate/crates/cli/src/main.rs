//! `catmodel`: classify, factor and lift functors between finite categories,
//! compute arrow pseudo(co)limits, coequifiers, coinserters and weighted
//! limits, and run the seeded verification suites.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CliError, Outcome};

#[derive(Debug, Parser)]
#[command(
    name = "catmodel",
    version,
    about = "Model-structure computations on finite categories"
)]
struct Cli {
    /// Print a JSON document instead of the text summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide the five model-structure classes of a functor, with witnesses.
    Classify { file: PathBuf, functor: String },
    /// Factor a functor in one of the three modes.
    Factor {
        file: PathBuf,
        functor: String,
        /// WE_then_Fib, Cof_then_TrivFib or TrivCof_then_Fib.
        #[arg(long, default_value = "Cof_then_TrivFib")]
        mode: String,
    },
    /// Solve a lifting square, or report that it has no diagonal.
    Lift { file: PathBuf, square: String },
    /// Build and classify the corner map of `i` and `p`.
    Corner { file: PathBuf, i: String, p: String },
    /// Pseudolimit of an arrow.
    Pseudolimit { file: PathBuf, functor: String },
    /// Pseudocolimit of an arrow.
    Pseudocolimit { file: PathBuf, functor: String },
    /// Coequifier of two parallel transformations.
    Coequifier {
        file: PathBuf,
        alpha: String,
        beta: String,
    },
    /// Coinserter of two parallel functors.
    Coinserter {
        file: PathBuf,
        f: String,
        g: String,
        /// Largest number of arrows to create before giving up.
        #[arg(long, default_value_t = 10_000)]
        bound: u64,
    },
    /// Weighted limit `{J, S}`, checked on small probe categories.
    WeightedLimit {
        file: PathBuf,
        weight: String,
        diagram: String,
        /// Check the defining isomorphism on probes with at most this many objects.
        #[arg(long, default_value_t = 1)]
        probe_size: usize,
    },
    /// Run a seeded verification suite.
    Verify {
        /// model-axioms, enrichment, generators, pseudolimit-criterion,
        /// pseudocolimit or weights-closure.
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_objects: usize,
        #[arg(long, default_value_t = 15)]
        max_morphisms: usize,
        #[arg(long, default_value_t = 2)]
        probe_size: usize,
        /// Include wall time in the report. Reports are then no longer
        /// reproducible byte for byte.
        #[arg(long)]
        timing: bool,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    use commands::*;
    match &cli.command {
        Command::Classify { file, functor } => classify(&load(file)?, functor),
        Command::Factor {
            file,
            functor,
            mode,
        } => factor(&load(file)?, functor, mode),
        Command::Lift { file, square } => lift(&load(file)?, square),
        Command::Corner { file, i, p } => corner(&load(file)?, i, p),
        Command::Pseudolimit { file, functor } => pseudolimit(&load(file)?, functor),
        Command::Pseudocolimit { file, functor } => pseudocolimit(&load(file)?, functor),
        Command::Coequifier { file, alpha, beta } => coequifier(&load(file)?, alpha, beta),
        Command::Coinserter { file, f, g, bound } => coinserter(&load(file)?, f, g, *bound),
        Command::WeightedLimit {
            file,
            weight,
            diagram,
            probe_size,
        } => weighted_limit(&load(file)?, weight, diagram, *probe_size),
        Command::Verify {
            suite,
            seed,
            count,
            max_objects,
            max_morphisms,
            probe_size,
            timing,
        } => {
            let suite = catmodel::verify::Suite::parse(suite)
                .ok_or_else(|| CliError::Usage(format!("unknown suite `{suite}`")))?;
            let mut config = catmodel::verify::SuiteConfig::new(suite, *seed, *count);
            config.max_objects = *max_objects;
            config.max_morphisms = *max_morphisms;
            config.probe_size = *probe_size;
            config.timing = *timing;
            verify(&config)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("reports serialize")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("catmodel: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
