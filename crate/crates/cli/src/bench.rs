use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use mcs_core::exact::DEFAULT_VERTEX_CAP;
use mcs_core::random::{random_tree, SplitMix64};
use mcs_core::{brute_force_mcs, solve_tree_mcs};

use crate::UsageError;

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// Uniform random colored trees.
    RandomTrees,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchAlgo {
    Both,
    Brute,
    TreeDp,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "random-trees")]
    suite: Suite,
    #[arg(long, default_value_t = 10)]
    count: u64,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_c: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "both")]
    algo: BenchAlgo,
}

/// Instance `j` uses seed `seed + j`: `n` uniform in `1..=max_n`, `c` in
/// `1..=max_c`, then the tree. One row per algorithm per instance.
pub fn run(args: &BenchArgs, out: &mut impl Write) -> Result<()> {
    if args.max_n == 0 || args.max_c == 0 {
        bail!(UsageError("--max-n and --max-c must be positive".into()));
    }
    if args.algo != BenchAlgo::TreeDp && args.max_n > DEFAULT_VERTEX_CAP {
        bail!(UsageError(format!("brute force needs --max-n <= {DEFAULT_VERTEX_CAP}; use --algo tree-dp")));
    }
    let Suite::RandomTrees = args.suite;
    writeln!(out, "n,c,seed,algo,size,millis,memo_entries")?;
    for j in 0..args.count {
        let seed = args.seed.wrapping_add(j);
        let mut rng = SplitMix64::new(seed);
        let n = rng.range(1, args.max_n);
        let c = rng.range(1, args.max_c);
        let g = random_tree(n, c, &mut rng);
        if args.algo != BenchAlgo::TreeDp {
            let start = Instant::now();
            let cert = brute_force_mcs(&g)?;
            writeln!(out, "{n},{c},{seed},brute,{},{},0", cert.size(), start.elapsed().as_millis())?;
        }
        if args.algo != BenchAlgo::Brute {
            let start = Instant::now();
            let sol = solve_tree_mcs(&g)?;
            let millis = start.elapsed().as_millis();
            writeln!(out, "{n},{c},{seed},tree-dp,{},{millis},{}", sol.certificate.size(), sol.stats.memo_entries)?;
        }
    }
    Ok(())
}
