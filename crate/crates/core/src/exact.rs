//! Brute-force exact solvers.
//!
//! Subsets are enumerated by increasing cardinality and, within one
//! cardinality, in lexicographic order of their sorted vertex lists. The
//! first accepted subset is the reported witness, so results are fully
//! deterministic. The parallel path splits each cardinality tier into
//! lexicographically ordered prefix groups and keeps the first hit in group
//! order, which yields the same witness as the sequential scan.

use itertools::Itertools;

use crate::certificate::{Certificate, Provenance};
use crate::consistency::{ConsistencyChecker, Variant};
use crate::error::{Error, Result};
use crate::graph::{blocks, ColoredGraph, Vertex};
use crate::parallel;
use crate::reductions::set_cover::SetCoverInstance;

pub const DEFAULT_VERTEX_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceConfig {
    /// Largest instance (vertices, or sets for set cover) accepted.
    pub cap: usize,
    /// Search tiers with the parallel path; ignored without the `parallel`
    /// feature.
    pub parallel: bool,
    /// Skip subsets missing a color class (MCS) or a block (MSCS).
    pub prune: bool,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        BruteForceConfig { cap: DEFAULT_VERTEX_CAP, parallel: true, prune: true }
    }
}

impl BruteForceConfig {
    pub fn sequential() -> Self {
        BruteForceConfig { parallel: false, ..Self::default() }
    }

    pub fn with_cap(cap: usize) -> Self {
        BruteForceConfig { cap, ..Self::default() }
    }
}

/// Lexicographically ordered groups covering all `k`-subsets of `0..n`:
/// one group per prefix of length `min(k, 2)`.
fn tier_groups(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k.min(2)).collect()
}

fn group_members(n: usize, k: usize, prefix: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let start = prefix.last().map_or(0, |&p| p + 1);
    (start..n).combinations(k - prefix.len()).map(move |rest| {
        let mut s = prefix.to_vec();
        s.extend(rest);
        s
    })
}

/// First accepted subset of cardinality `k`, or `None`.
pub(crate) fn first_in_tier<F>(n: usize, k: usize, par: bool, accept: &F) -> Option<Vec<usize>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    if k > n {
        return None;
    }
    let groups = tier_groups(n, k);
    parallel::find_map_first(&groups, par, |prefix| group_members(n, k, prefix).find(|s| accept(s)))
}

/// Every accepted subset of cardinality `k`, in enumeration order.
pub(crate) fn all_in_tier<F>(n: usize, k: usize, par: bool, accept: &F) -> Vec<Vec<usize>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    if k > n {
        return Vec::new();
    }
    let groups = tier_groups(n, k);
    parallel::flat_map(&groups, par, |prefix| group_members(n, k, prefix).filter(|s| accept(s)).collect())
}

fn first_in_tiers<F>(n: usize, min_k: usize, par: bool, accept: F) -> Option<Vec<usize>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    (min_k..=n).find_map(|k| first_in_tier(n, k, par, &accept))
}

fn prepare(g: &ColoredGraph, cfg: &BruteForceConfig) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    if g.n() > cfg.cap {
        return Err(Error::CapExceeded { n: g.n(), cap: cfg.cap });
    }
    g.require_connected()
}

/// Acceptance predicate for `variant` plus the smallest tier worth
/// searching.
fn subset_filter<'a>(
    checker: &'a ConsistencyChecker<'a>,
    variant: Variant,
    prune: bool,
) -> (usize, impl Fn(&[usize]) -> bool + Sync + 'a) {
    let g = checker.graph();
    let (min_k, required): (usize, Option<Vec<usize>>) = match (variant, prune) {
        (_, false) => (1, None),
        (Variant::Mcs, true) => {
            // group index per vertex = its color
            (g.used_colors().len(), Some(g.colors().iter().map(|&c| c as usize).collect()))
        }
        (Variant::Mscs, true) => {
            let b = blocks(g);
            (b.len(), Some(b.block_of))
        }
    };
    let groups = required.as_ref().map_or(0, |r| r.iter().max().map_or(0, |&m| m + 1));
    let distinct = if prune { min_k } else { 0 };
    let accept = move |s: &[usize]| {
        if let Some(group_of) = &required {
            let mut hit = vec![false; groups];
            let mut count = 0;
            for &v in s {
                let gi = group_of[v];
                if !hit[gi] {
                    hit[gi] = true;
                    count += 1;
                }
            }
            if count < distinct {
                return false;
            }
        }
        checker.check(s, variant)
    };
    (min_k, accept)
}

pub fn brute_force(g: &ColoredGraph, variant: Variant, cfg: &BruteForceConfig) -> Result<Certificate> {
    prepare(g, cfg)?;
    let checker = ConsistencyChecker::new(g);
    let (min_k, accept) = subset_filter(&checker, variant, cfg.prune);
    // S = V always passes, so the search cannot come back empty.
    let witness = first_in_tiers(g.n(), min_k, cfg.parallel, accept).expect("V(G) is always consistent");
    Certificate::new(variant, witness, Provenance::BruteForceOptimal)
}

pub fn brute_force_mcs(g: &ColoredGraph) -> Result<Certificate> {
    brute_force(g, Variant::Mcs, &BruteForceConfig::default())
}

pub fn brute_force_mscs(g: &ColoredGraph) -> Result<Certificate> {
    brute_force(g, Variant::Mscs, &BruteForceConfig::default())
}

/// All minimum-cardinality witnesses, in enumeration order.
pub fn all_optimal(g: &ColoredGraph, variant: Variant, cfg: &BruteForceConfig) -> Result<Vec<Vec<Vertex>>> {
    prepare(g, cfg)?;
    let checker = ConsistencyChecker::new(g);
    let (min_k, accept) = subset_filter(&checker, variant, cfg.prune);
    for k in min_k..=g.n() {
        let found = all_in_tier(g.n(), k, cfg.parallel, &accept);
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("V(G) is always consistent")
}

/// Classical problems used to cross-check the reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleProblem {
    /// Colors are ignored.
    DominatingSet(ColoredGraph),
    /// Colors are ignored.
    VertexCover(ColoredGraph),
    SetCover(SetCoverInstance),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSolution {
    pub size: usize,
    /// Vertices for the graph problems, set indices for set cover; 0-based.
    pub witness: Vec<usize>,
}

pub fn solve_oracle(problem: &OracleProblem, cfg: &BruteForceConfig) -> Result<OracleSolution> {
    let found = match problem {
        OracleProblem::DominatingSet(g) => {
            if g.n() > cfg.cap {
                return Err(Error::CapExceeded { n: g.n(), cap: cfg.cap });
            }
            first_in_tiers(g.n(), 0, cfg.parallel, |s| is_dominating(g, s))
        }
        OracleProblem::VertexCover(g) => {
            if g.n() > cfg.cap {
                return Err(Error::CapExceeded { n: g.n(), cap: cfg.cap });
            }
            let edges = g.edges();
            first_in_tiers(g.n(), 0, cfg.parallel, |s| edges.iter().all(|(u, w)| s.contains(u) || s.contains(w)))
        }
        OracleProblem::SetCover(sc) => {
            let m = sc.sets.len();
            if m > cfg.cap {
                return Err(Error::CapExceeded { n: m, cap: cfg.cap });
            }
            first_in_tiers(m, 0, cfg.parallel, |chosen| sc.is_cover(chosen))
        }
    };
    let witness = found.ok_or_else(|| Error::InvalidInput("instance has no feasible solution".into()))?;
    Ok(OracleSolution { size: witness.len(), witness })
}

pub fn is_dominating(g: &ColoredGraph, set: &[Vertex]) -> bool {
    let mut dominated = vec![false; g.n()];
    for &v in set {
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    }
    dominated.into_iter().all(|d| d)
}

pub fn is_vertex_cover(g: &ColoredGraph, set: &[Vertex]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().into_iter().all(|(u, w)| inside[u] || inside[w])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(colors: &[u32], edges: &[(usize, usize)]) -> ColoredGraph {
        let c = *colors.iter().max().unwrap() as usize;
        ColoredGraph::new(c, colors.to_vec(), edges).unwrap()
    }

    fn path(colors: &[u32]) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        graph(colors, &edges)
    }

    fn star_red_center() -> ColoredGraph {
        graph(&[1, 2, 2, 2], &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn monochromatic_is_a_singleton() {
        let g = graph(&[1; 5], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(brute_force_mcs(&g).unwrap().witness(), &[0]);
        assert_eq!(brute_force_mscs(&g).unwrap().witness(), &[0]);
    }

    #[test]
    fn small_mcs_values() {
        let rrbb = path(&[1, 1, 2, 2]);
        let c = brute_force_mcs(&rrbb).unwrap();
        assert_eq!(c.size(), 2);
        assert_eq!(c.provenance(), Provenance::BruteForceOptimal);
        assert_eq!(brute_force_mcs(&star_red_center()).unwrap().size(), 4);
    }

    #[test]
    fn small_mscs_values() {
        assert_eq!(brute_force_mscs(&path(&[1, 2, 1])).unwrap().size(), 3);
        let c = brute_force_mscs(&path(&[1, 1, 2, 2])).unwrap();
        assert_eq!(c.size(), 2);
        // {1,4} in 1-based ids: each end vertex is strictly nearer its own run
        assert_eq!(c.witness(), &[0, 3]);
        assert!(crate::consistency::is_strict_consistent(&path(&[1, 1, 2, 2]), &[1, 2]).unwrap());
    }

    #[test]
    fn witness_is_lexicographically_first() {
        // path r r b b: {0,2} is the first consistent 2-subset
        let c = brute_force_mcs(&path(&[1, 1, 2, 2])).unwrap();
        assert_eq!(c.witness(), &[0, 2]);
        let all = all_optimal(&path(&[1, 1, 2, 2]), Variant::Mcs, &BruteForceConfig::default()).unwrap();
        assert_eq!(all[0], c.witness());
        assert!(all.contains(&vec![1, 2]));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g =
            graph(&[1, 2, 3, 1, 2, 3, 1, 2], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (2, 6)]);
        for variant in [Variant::Mcs, Variant::Mscs] {
            let a = brute_force(&g, variant, &BruteForceConfig::sequential()).unwrap();
            let b = brute_force(&g, variant, &BruteForceConfig::default()).unwrap();
            let c = brute_force(&g, variant, &BruteForceConfig { prune: false, ..Default::default() }).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.witness(), c.witness());
        }
    }

    #[test]
    fn guards() {
        let big = path(&[1; 21]);
        assert_eq!(brute_force_mcs(&big), Err(Error::CapExceeded { n: 21, cap: 20 }));
        assert!(brute_force(&big, Variant::Mcs, &BruteForceConfig::with_cap(21)).is_ok());
        let split = graph(&[1, 2], &[]);
        assert_eq!(brute_force_mscs(&split), Err(Error::Disconnected));
    }

    #[test]
    fn oracle_examples() {
        let cfg = BruteForceConfig::default();
        let p3 = path(&[1, 1, 1]);
        let ds = solve_oracle(&OracleProblem::DominatingSet(p3), &cfg).unwrap();
        assert_eq!(ds, OracleSolution { size: 1, witness: vec![1] });

        let k4_edges: Vec<_> = (0..4).tuple_combinations().collect();
        let k4 = graph(&[1; 4], &k4_edges);
        let vc = solve_oracle(&OracleProblem::VertexCover(k4.clone()), &cfg).unwrap();
        assert_eq!(vc.size, 3);
        assert!(is_vertex_cover(&k4, &vc.witness));

        let sc = SetCoverInstance::new(3, vec![vec![0], vec![0, 1, 2], vec![2]]).unwrap();
        let cover = solve_oracle(&OracleProblem::SetCover(sc), &cfg).unwrap();
        assert_eq!(cover, OracleSolution { size: 1, witness: vec![1] });
    }
}
