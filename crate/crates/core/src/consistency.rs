//! Consistent and strict consistent subset checks.
//!
//! `S` is consistent when every vertex has a same-colored vertex among its
//! nearest neighbors in `S`, and strict consistent when all of its nearest
//! neighbors in `S` share its color.

use std::fmt;
use std::str::FromStr;

use crate::distance::{all_pairs_hop_distances, bfs, DistanceMatrix, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Vertex};

/// Graphs up to this many vertices are checked against a dense distance
/// matrix; larger ones with one multi-source BFS per color.
pub const MATRIX_THRESHOLD: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Mcs,
    Mscs,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Mcs => "mcs",
            Variant::Mscs => "mscs",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mcs" => Ok(Variant::Mcs),
            "mscs" => Ok(Variant::Mscs),
            other => Err(Error::InvalidInput(format!("unknown variant `{other}`"))),
        }
    }
}

pub fn is_consistent(g: &ColoredGraph, subset: &[Vertex]) -> Result<bool> {
    check(g, subset, Variant::Mcs)
}

pub fn is_strict_consistent(g: &ColoredGraph, subset: &[Vertex]) -> Result<bool> {
    check(g, subset, Variant::Mscs)
}

/// Validates the preconditions (connected graph, nonempty in-range subset)
/// and runs the check for `variant`.
pub fn check(g: &ColoredGraph, subset: &[Vertex], variant: Variant) -> Result<bool> {
    g.check_subset(subset)?;
    g.require_connected()?;
    if g.n() <= MATRIX_THRESHOLD {
        Ok(ConsistencyChecker::new(g).check(subset, variant))
    } else {
        Ok(check_by_bfs(g, subset, variant))
    }
}

/// Per-color BFS check; no precondition validation.
pub(crate) fn check_by_bfs(g: &ColoredGraph, subset: &[Vertex], variant: Variant) -> bool {
    let to_subset = bfs(g, subset.iter().copied());
    let mut ok = vec![true; g.n()];
    for color in g.used_colors() {
        let sources = subset.iter().copied().filter(|&s| match variant {
            Variant::Mcs => g.color(s) == color,
            Variant::Mscs => g.color(s) != color,
        });
        let d = bfs(g, sources);
        for v in (0..g.n()).filter(|&v| g.color(v) == color) {
            ok[v] = match variant {
                Variant::Mcs => d[v] != UNREACHABLE && d[v] == to_subset[v],
                Variant::Mscs => d[v] > to_subset[v],
            };
        }
    }
    ok.into_iter().all(|b| b)
}

/// Reusable checker backed by a dense distance matrix; the brute-force
/// solvers run one of these per instance.
#[derive(Debug, Clone)]
pub struct ConsistencyChecker<'g> {
    graph: &'g ColoredGraph,
    dist: DistanceMatrix,
}

impl<'g> ConsistencyChecker<'g> {
    pub fn new(graph: &'g ColoredGraph) -> Self {
        ConsistencyChecker { graph, dist: all_pairs_hop_distances(graph) }
    }

    pub fn graph(&self) -> &'g ColoredGraph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Assumes a connected graph and a nonempty, in-range subset.
    pub fn check(&self, subset: &[Vertex], variant: Variant) -> bool {
        let g = self.graph;
        (0..g.n()).all(|v| {
            let row = self.dist.row(v);
            let cv = g.color(v);
            let mut best = UNREACHABLE;
            let mut same = false;
            let mut other = false;
            for &s in subset {
                let d = row[s];
                if d < best {
                    best = d;
                    same = false;
                    other = false;
                }
                if d == best {
                    if g.color(s) == cv {
                        same = true;
                    } else {
                        other = true;
                    }
                }
            }
            match variant {
                Variant::Mcs => same,
                Variant::Mscs => !other,
            }
        })
    }
}
