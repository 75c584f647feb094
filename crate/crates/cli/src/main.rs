//! `mcs`: solve, verify, generate, inspect and benchmark minimum
//! consistent subset instances.
//!
//! Exit codes: 0 success, 1 failed verification, 2 parse or parameter
//! error, 3 solver precondition violated.

mod bench;
mod gen;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mcs_core::exact::BruteForceConfig;
use mcs_core::format::{format_ids, parse_ccg, parse_subset};
use mcs_core::{blocks, brute_force, check, solve_tree_mcs, ColoredGraph, Error, Variant};

#[derive(Parser)]
#[command(name = "mcs", version, about = "Minimum consistent subsets of vertex-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an optimal subset.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "mcs")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "auto")]
        algo: Algo,
        /// Largest graph brute force will enumerate.
        #[arg(long, default_value_t = mcs_core::exact::DEFAULT_VERTEX_CAP)]
        cap: usize,
        /// Enumerate on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Check a subset against both definitions.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        subset: PathBuf,
        #[arg(long, value_enum, default_value = "mcs")]
        variant: VariantArg,
    },
    /// Generate a reduction instance.
    Gen(gen::GenArgs),
    /// Print basic facts about a graph.
    Inspect {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare solvers on seeded random instances (CSV on stdout).
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Mcs,
    Mscs,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Mcs => Variant::Mcs,
            VariantArg::Mscs => Variant::Mscs,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Brute,
    TreeDp,
}

/// Raised for problems with the command line itself rather than the input.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::Disconnected
            | Error::NotATree
            | Error::CapExceeded { .. }
            | Error::TooManyColors { .. }
            | Error::NotCubic { .. },
        ) => 3,
        _ => 2,
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Solve { input, variant, algo, cap, sequential } => {
            let g = read_graph(&input)?;
            print!("{}", solve(&g, variant.into(), algo, cap, sequential)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, subset, variant } => {
            let g = read_graph(&input)?;
            let s = parse_subset(&read(&subset)?, g.n()).with_context(|| subset.display().to_string())?;
            let consistent = check(&g, &s, Variant::Mcs)?;
            let strict = check(&g, &s, Variant::Mscs)?;
            println!("consistent={consistent}");
            println!("strict={strict}");
            let ok = match Variant::from(variant) {
                Variant::Mcs => consistent,
                Variant::Mscs => strict,
            };
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Gen(args) => {
            // every generator failure is a bad parameter or source instance
            let out = gen::run(&args).map_err(|e| anyhow::Error::new(UsageError(format!("{e:#}"))))?;
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Inspect { input } => {
            print!("{}", inspect(&read_graph(&input)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench(args) => {
            bench::run(&args, &mut std::io::stdout().lock())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<ColoredGraph> {
    parse_ccg(&read(path)?).with_context(|| path.display().to_string())
}

fn solve(g: &ColoredGraph, variant: Variant, algo: Algo, cap: usize, sequential: bool) -> Result<String> {
    let algo = match algo {
        Algo::Auto if variant == Variant::Mcs && g.is_tree() => Algo::TreeDp,
        Algo::Auto => Algo::Brute,
        Algo::TreeDp if variant == Variant::Mscs => {
            bail!(UsageError("--algo tree-dp only supports --variant mcs".into()))
        }
        other => other,
    };
    let (cert, name) = if algo == Algo::TreeDp {
        (solve_tree_mcs(g)?.certificate, "tree-dp")
    } else {
        let mut cfg = BruteForceConfig::with_cap(cap);
        cfg.parallel = !sequential;
        (brute_force(g, variant, &cfg)?, "brute")
    };
    Ok(format!("size={}\nwitness={}\nalgo={name}\n", cert.size(), format_ids(cert.witness())))
}

fn inspect(g: &ColoredGraph) -> String {
    let used = g.used_colors().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    format!(
        "n={}\nedges={}\ncolors={}\nused_colors={used}\nconnected={}\ntree={}\nblocks={}\n",
        g.n(),
        g.num_edges(),
        g.num_colors(),
        g.is_connected(),
        g.is_tree(),
        blocks(g).len()
    )
}
