//! Seeded instance generators.
//!
//! The PRNG is SplitMix64; `below(k)` is `next_u64() % k`. A random tree
//! on `n` vertices draws its Prüfer sequence first (`n - 2` values), then
//! the colors of vertices `0..n` in order, each uniform over `1..=c`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::graph::{Color, ColoredGraph, Vertex};
use crate::reductions::{Literal, SetCoverInstance, TwoSatFormula};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..k`.
    pub fn below(&mut self, k: u64) -> u64 {
        assert!(k > 0);
        self.next_u64() % k
    }

    /// Value in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Decodes a Prüfer sequence over `0..n` (`seq.len() == n - 2`).
pub fn prufer_to_edges(seq: &[usize], n: usize) -> Vec<(Vertex, Vertex)> {
    if n <= 1 {
        return Vec::new();
    }
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a.min(b), a.max(b)));
    edges
}

fn random_colors(n: usize, c: usize, rng: &mut SplitMix64) -> Vec<Color> {
    (0..n).map(|_| 1 + rng.below(c as u64) as Color).collect()
}

fn random_tree_edges(n: usize, rng: &mut SplitMix64) -> Vec<(Vertex, Vertex)> {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.below(n as u64) as usize).collect();
    prufer_to_edges(&seq, n)
}

/// Uniform labeled tree on `n >= 1` vertices with `c` colors.
pub fn random_tree(n: usize, c: usize, rng: &mut SplitMix64) -> ColoredGraph {
    assert!(n >= 1 && c >= 1);
    let edges = random_tree_edges(n, rng);
    let colors = random_colors(n, c, rng);
    ColoredGraph::new(c, colors, &edges).expect("valid tree")
}

/// A random spanning tree plus each remaining pair with probability
/// `extra_num / extra_den`, then colors.
pub fn random_connected_graph(
    n: usize,
    c: usize,
    extra_num: u64,
    extra_den: u64,
    rng: &mut SplitMix64,
) -> ColoredGraph {
    assert!(n >= 1 && c >= 1);
    let mut edges = random_tree_edges(n, rng);
    let tree: HashSet<(Vertex, Vertex)> = edges.iter().copied().collect();
    for u in 0..n {
        for w in u + 1..n {
            if !tree.contains(&(u, w)) && rng.chance(extra_num, extra_den) {
                edges.push((u, w));
            }
        }
    }
    let colors = random_colors(n, c, rng);
    ColoredGraph::new(c, colors, &edges).expect("valid graph")
}

/// Each element joins each set with probability 1/2; an element left
/// uncovered is added to a uniformly chosen set.
pub fn random_set_cover(n: usize, m: usize, rng: &mut SplitMix64) -> SetCoverInstance {
    assert!(m >= 1);
    let mut sets = vec![Vec::new(); m];
    for e in 0..n {
        let mut placed = false;
        for set in sets.iter_mut() {
            if rng.chance(1, 2) {
                set.push(e);
                placed = true;
            }
        }
        if !placed {
            sets[rng.below(m as u64) as usize].push(e);
        }
    }
    SetCoverInstance::new(n, sets).expect("every element is covered")
}

/// `m` clauses, each literal a uniform variable with a fair-coin sign.
pub fn random_2sat(n: usize, m: usize, rng: &mut SplitMix64) -> TwoSatFormula {
    assert!(n >= 1);
    let lit = |rng: &mut SplitMix64| Literal { var: 1 + rng.below(n as u64) as usize, positive: rng.chance(1, 2) };
    let clauses = (0..m).map(|_| (lit(rng), lit(rng))).collect();
    TwoSatFormula::new(n, clauses).expect("variables in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
    }

    #[test]
    fn prufer_decoding() {
        assert_eq!(prufer_to_edges(&[3, 3, 3, 4], 6), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(prufer_to_edges(&[], 2), vec![(0, 1)]);
        assert!(prufer_to_edges(&[], 1).is_empty());
    }

    #[test]
    fn trees_are_trees_and_deterministic() {
        for n in 1..20 {
            let a = random_tree(n, 3, &mut SplitMix64::new(n as u64));
            let b = random_tree(n, 3, &mut SplitMix64::new(n as u64));
            assert!(a.is_tree());
            assert_eq!(a.edges(), b.edges());
            assert_eq!(a.colors(), b.colors());
        }
    }

    #[test]
    fn other_generators() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..20 {
            assert!(random_connected_graph(7, 2, 1, 3, &mut rng).is_connected());
            let sc = random_set_cover(5, 3, &mut rng);
            assert!(sc.is_cover(&[0, 1, 2]));
            let f = random_2sat(3, 4, &mut rng);
            assert_eq!(f.num_clauses(), 4);
        }
    }
}
