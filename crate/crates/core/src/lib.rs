//! Minimum consistent subsets of vertex-colored graphs.
//!
//! A subset `S` is *consistent* when every vertex has a nearest neighbor
//! in `S` (hop distance, itself at distance 0) of its own color, and
//! *strict consistent* when all of its nearest neighbors in `S` share its
//! color.
//!
//! - [`graph`], [`format`]: colored graphs and the CCG text format.
//! - [`consistency`]: the two checkers.
//! - [`exact`]: brute-force optimal subsets plus small classical oracles.
//! - [`tree_dp`]: the exact dynamic program for trees.
//! - [`reductions`]: hardness-construction generators with certificates.
//! - [`random`]: seeded instance generators.

pub mod certificate;
pub mod consistency;
pub mod distance;
pub mod error;
pub mod exact;
pub mod format;
pub mod graph;
pub mod parallel;
pub mod random;
pub mod reductions;
pub mod tree_dp;

pub use certificate::{Certificate, Provenance};
pub use consistency::{check, is_consistent, is_strict_consistent, ConsistencyChecker, Variant};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use exact::{brute_force, brute_force_mcs, brute_force_mscs, BruteForceConfig};
pub use graph::{blocks, Blocks, Color, ColoredGraph, Vertex};
pub use tree_dp::{solve_many, solve_tree_mcs, TreeSolution};
