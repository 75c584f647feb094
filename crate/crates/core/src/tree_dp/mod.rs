//! Exact minimum consistent subsets on colored trees, parameterized by the
//! number of colors.

mod color_set;
mod dp;
mod rooted;

pub use color_set::ColorSet;
pub use dp::{nearest, Dist, DpKey, DpStats, TreeDp};
pub use rooted::{root_tree, RootedTree};

use crate::certificate::{Certificate, Provenance};
use crate::consistency::Variant;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Vertex};

/// Trees above this size are solved on a dedicated thread with a stack
/// sized for the recursion depth.
const INLINE_STACK_LIMIT: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSolution {
    pub certificate: Certificate,
    pub stats: DpStats,
    /// The top-level entry the witness was reconstructed from.
    pub root_key: DpKey,
}

/// Minimum consistent subset of a tree, rooted at vertex 0.
///
/// The optimum is the smallest `P(T(r), δ, ∞, ∞, C', ∅, ∅)` over finite
/// `δ` and nonempty `C'`; ties go to the smallest `δ`, then the smallest
/// `C'` in bit order.
pub fn solve_tree_mcs(g: &ColoredGraph) -> Result<TreeSolution> {
    if g.n() > INLINE_STACK_LIMIT {
        let stack = (64 << 20) + g.n() * (16 << 10);
        std::thread::scope(|s| {
            std::thread::Builder::new()
                .stack_size(stack)
                .spawn_scoped(s, || solve_inline(g))
                .expect("spawn solver thread")
                .join()
                .expect("solver thread panicked")
        })
    } else {
        solve_inline(g)
    }
}

/// Solves each tree independently, in parallel when `parallel` is set and
/// the feature is enabled. Results keep input order.
pub fn solve_many(graphs: &[ColoredGraph], parallel: bool) -> Vec<Result<TreeSolution>> {
    crate::parallel::map(graphs, parallel, solve_tree_mcs)
}

fn solve_inline(g: &ColoredGraph) -> Result<TreeSolution> {
    let tree = root_tree(g, 0)?;
    let mut dp = TreeDp::new(&tree);
    let root = tree.root();
    let mut best: Option<(usize, DpKey)> = None;
    for d in 0..=tree.height(root) {
        for cin in tree.subtree_colors(root).nonempty_subsets() {
            let key = DpKey::full(&tree, root, Dist::finite(d), cin, Dist::INF, ColorSet::EMPTY);
            if let Some(val) = dp.entry(&key) {
                if best.is_none_or(|(b, _)| val < b) {
                    best = Some((val, key));
                }
            }
        }
    }
    let (size, root_key) = best.ok_or_else(|| Error::InvalidInput("no consistent subset found".into()))?;
    let witness: Vec<Vertex> = dp.witness(&root_key)?.expect("optimal entry is finite");
    debug_assert_eq!(witness.len(), size);
    let certificate = Certificate::new(Variant::Mcs, witness, Provenance::TreeDpOptimal)?;
    Ok(TreeSolution { certificate, stats: dp.stats(), root_key })
}
