use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use mcs_core::format::{parse_ccg, write_ccg_with_comments};
use mcs_core::random::{random_2sat, random_connected_graph, random_set_cover, SplitMix64};
use mcs_core::reductions::interval::write_intervals;
use mcs_core::reductions::max2sat::parse_cnf;
use mcs_core::reductions::set_cover::parse_set_cover;
use mcs_core::reductions::{self, ReductionMetadata};
use mcs_core::ColoredGraph;

use crate::UsageError;

#[derive(Clone, Copy, ValueEnum)]
pub enum Reduction {
    /// Dominating set to MCS (input: CCG graph, colors ignored).
    DsMcs,
    /// MAX-2SAT to MCS on a tree (input: DIMACS CNF).
    #[value(name = "2sat-tree")]
    TwoSatTree,
    /// Cubic vertex cover to MCS on an interval graph (input: CCG graph).
    VcInterval,
    /// Set cover to MSCS (input: `p sc` file).
    ScMscs,
    /// Dominating set to MSCS (input: CCG graph, colors ignored).
    DsMscs,
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    reduction: Reduction,
    /// Source instance; a random one is drawn from `--seed` when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write `<prefix>.ccg`, `<prefix>.meta` (and `<prefix>.intervals`)
    /// instead of printing the graph with the metadata as comments.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random source size: vertices, elements or variables.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Random source size: sets or clauses.
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Stabilizer pairs per variable (2sat-tree; default n³).
    #[arg(long = "M")]
    stabilizers: Option<usize>,
    /// Small intervals per gadget (vc-interval; default n³).
    #[arg(long)]
    p: Option<usize>,
    /// Small intervals per gap (vc-interval; default n⁴).
    #[arg(long)]
    q: Option<usize>,
}

struct Generated {
    graph: ColoredGraph,
    metadata: ReductionMetadata,
    intervals: Option<String>,
}

fn read(args: &GenArgs) -> Result<Option<String>> {
    args.input.as_ref().map(|p| fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))).transpose()
}

fn source_graph(args: &GenArgs, rng: &mut SplitMix64) -> Result<ColoredGraph> {
    match read(args)? {
        Some(text) => Ok(parse_ccg(&text)?),
        None if args.n == 0 => bail!(UsageError("--n must be positive".into())),
        None => Ok(random_connected_graph(args.n, 1, 1, 3, rng)),
    }
}

fn generate(args: &GenArgs) -> Result<Generated> {
    let mut rng = SplitMix64::new(args.seed);
    let plain = |graph, metadata| Generated { graph, metadata, intervals: None };
    Ok(match args.reduction {
        Reduction::DsMcs => {
            let red = reductions::dominating_to_mcs(&source_graph(args, &mut rng)?)?;
            plain(red.graph, red.metadata)
        }
        Reduction::DsMscs => {
            let red = reductions::ds_planar_to_mscs(&source_graph(args, &mut rng)?)?;
            plain(red.graph, red.metadata)
        }
        Reduction::ScMscs => {
            let sc = match read(args)? {
                Some(text) => parse_set_cover(&text)?,
                None if args.m == 0 => bail!(UsageError("--m must be positive".into())),
                None => random_set_cover(args.n, args.m, &mut rng),
            };
            let red = reductions::setcover_to_mscs(&sc)?;
            plain(red.graph, red.metadata)
        }
        Reduction::TwoSatTree => {
            let f = match read(args)? {
                Some(text) => parse_cnf(&text)?,
                None if args.n == 0 => bail!(UsageError("--n must be positive".into())),
                None => random_2sat(args.n, args.m, &mut rng),
            };
            let red = reductions::max2sat_to_tree(&f, args.stabilizers)?;
            if let Some(w) = &red.warning {
                eprintln!("warning: {w}");
            }
            plain(red.graph, red.metadata)
        }
        Reduction::VcInterval => {
            if args.input.is_none() {
                bail!(UsageError("vc-interval needs --input with a cubic graph".into()));
            }
            let g = source_graph(args, &mut rng)?;
            let (ii, metadata) = reductions::vc_to_intervals(&g, args.p, args.q)?;
            let graph = reductions::intervals_to_graph(&ii)?;
            Generated { graph, metadata, intervals: Some(write_intervals(&ii)) }
        }
    })
}

/// Returns what goes to stdout.
pub fn run(args: &GenArgs) -> Result<String> {
    let out = generate(args)?;
    let meta = out.metadata.to_text();
    let Some(prefix) = &args.output else {
        let comments: Vec<String> = meta.lines().map(str::to_string).collect();
        return Ok(write_ccg_with_comments(&out.graph, &comments));
    };
    let mut written = Vec::new();
    let mut emit = |ext: &str, text: &str| -> Result<()> {
        let path = prefix.with_extension(ext);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        written.push(format!("wrote={}\n", path.display()));
        Ok(())
    };
    emit("ccg", &mcs_core::format::write_ccg(&out.graph))?;
    emit("meta", &meta)?;
    if let Some(text) = &out.intervals {
        emit("intervals", text)?;
    }
    Ok(written.concat())
}
