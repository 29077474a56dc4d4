//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 a check failed.

pub mod commands;
pub mod report;
pub mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::budget::{Budget, DEFAULT_MAX_PRODUCTS, DEFAULT_MAX_STATE_BYTES};
use crate::error::{Error, Result};
use crate::scalar::rational::parse_rational;
use crate::selberg::SelbergParams;
use crate::tensor::Algorithm;

pub use report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "hyperdet",
    version,
    about = "Exact hyperdeterminants of Beta-moment Hankel tensors"
)]
pub struct Cli {
    /// Print the report as JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Maximum signed products for the permutation oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PRODUCTS)]
    pub max_products: u128,

    /// Maximum wedge-power state in bytes.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STATE_BYTES)]
    pub max_state: u128,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
}

impl ParamArgs {
    fn params(&self) -> Result<SelbergParams> {
        SelbergParams::new(parse_rational(&self.a)?, parse_rational(&self.b)?, self.k, self.n)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hyperdeterminant of a hypermatrix stored as JSON.
    Det {
        input: PathBuf,
        #[arg(long, default_value = "auto")]
        algorithm: String,
    },
    /// Normalized Selberg value S_n / (n! B(a,b)^n).
    Selberg {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        check_tensor: bool,
        #[arg(long)]
        check_numeric: bool,
    },
    /// Normalized Aomoto polynomial in y.
    Aomoto {
        #[command(flatten)]
        params: ParamArgs,
        /// Evaluate at this (rational) y.
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        check_tensor: bool,
        #[arg(long)]
        check_numeric: bool,
    },
    /// Dyson constant term and the top Hankel coefficient.
    Dyson {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Coefficient table of the Hankel expansion.
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity suite over a parameter grid.
    Verify {
        /// `default`, `quick`, or e.g. `a=1,2;b=1;k=1,2;n=1,2,3`.
        #[arg(long, default_value = "default")]
        grid: String,
        /// Random tensors for the algorithm, minor and invariance checks.
        #[arg(long, default_value_t = 40)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn dispatch(cli: &Cli, budget: &Budget) -> Result<Report> {
    match &cli.command {
        Command::Det { input, algorithm } => commands::cmd_det(input, algorithm.parse::<Algorithm>()?, budget),
        Command::Selberg {
            params,
            check_tensor,
            check_numeric,
        } => commands::cmd_selberg(&params.params()?, *check_tensor, *check_numeric, budget),
        Command::Aomoto {
            params,
            at,
            check_tensor,
            check_numeric,
        } => commands::cmd_aomoto(&params.params()?, at.as_deref(), *check_tensor, *check_numeric, budget),
        Command::Dyson { n, k } => commands::cmd_dyson(*n, *k, budget),
        Command::Expand { n, k, out } => commands::cmd_expand(*n, *k, out.as_deref(), budget),
        Command::Verify { grid, random, seed } => commands::cmd_verify(grid, *random, *seed, budget),
    }
}

pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Inconsistent(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    let budget = Budget {
        max_products: cli.max_products,
        max_state_bytes: cli.max_state,
        ..Budget::default()
    };
    let start = Instant::now();
    match dispatch(&cli, &budget) {
        Ok(mut report) => {
            report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_human());
            }
            if report.passed() {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
