use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use locdim::{Config, Error};

mod commands;
mod families;

#[derive(Parser, Debug)]
#[command(name = "locdim", version, about = "Exact local metric dimension of connected graphs")]
struct Cli {
    /// Worker threads for per-block solves.
    #[arg(long, global = true, env = "LOCDIM_THREADS", default_value_t = 1)]
    threads: usize,
    /// Largest graph the exact subset search will attempt.
    #[arg(long, global = true, default_value_t = 24)]
    max_exact: usize,
    /// Largest graph whose local metric bases are enumerated in full.
    #[arg(long, global = true, default_value_t = 16)]
    max_bases: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Edge-list file (`-` reads stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Construction expression.
    #[arg(long)]
    dsl: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Decomp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Rooted,
    Corona,
    Block,
    Bouquet,
    Chain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the local metric dimension and a witness basis.
    Dim {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Print blocks, cut vertices, non-bipartite flags and attachment sets.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every local metric basis.
    Bases {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Smallest S outside the constraint set C such that S and C together
    /// form a local metric generator.
    Rho {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',')]
        constraint: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a construction expression and print its edge list.
    Construct {
        /// Expression text.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        dsl: Option<String>,
        /// File holding an expression.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form dimension of a construction, optionally cross-checked.
    ClosedForm {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Construction expression of the matching kind.
        #[arg(long)]
        dsl: String,
        /// Also run the engine and, when small enough, whole-graph search.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Time whole-graph search against the block-sum engine.
    Bench {
        #[command(flatten)]
        source: families::BenchSource,
        /// Run both methods and check that they agree.
        #[arg(long)]
        compare: bool,
        /// Number of instances (consecutive seeds, or suite size).
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Omit timing fields from the output.
        #[arg(long)]
        no_timing: bool,
        /// One JSON report per line.
        #[arg(long)]
        json: bool,
    },
    /// Print a generated instance as an edge list.
    Gen {
        #[command(flatten)]
        family: families::FamilyArgs,
    },
}

/// Failure category, mapped to the process exit code.
pub enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Io(_)
            | Error::Syntax { .. }
            | Error::Arity { .. }
            | Error::UnknownIdentifier { .. }
            | Error::BadConfig(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

pub type CmdResult = Result<String, Failure>;

fn run(cli: Cli) -> CmdResult {
    let cfg = Config {
        max_exact: cli.max_exact,
        max_bases: cli.max_bases,
        ..Config::default()
    }
    .with_threads(cli.threads);
    match cli.command {
        Command::Dim { input, method, json } => commands::dim(&input, method, json, &cfg),
        Command::Decompose { input, json } => commands::decompose_cmd(&input, json),
        Command::Bases { input, json } => commands::bases(&input, json, &cfg),
        Command::Rho {
            input,
            constraint,
            json,
        } => commands::rho(&input, &constraint, json, &cfg),
        Command::Construct { dsl, file, json } => commands::construct(dsl, file, json),
        Command::ClosedForm {
            kind,
            dsl,
            verify,
            json,
        } => commands::closed_form(kind, &dsl, verify, json, &cfg),
        Command::Bench {
            source,
            compare,
            count,
            no_timing,
            json,
        } => families::bench(&source, compare, count, no_timing, json, &cfg),
        Command::Gen { family } => families::gen(&family),
    }
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
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
