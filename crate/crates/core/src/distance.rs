//! Hop distances and nearest-neighbor sets.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Vertex};

pub const UNREACHABLE: u32 = u32::MAX;

/// Dense all-pairs hop distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// `d(v, S)`, or `UNREACHABLE` when no member of `S` is reachable.
    pub fn to_set(&self, v: Vertex, set: &[Vertex]) -> u32 {
        let row = self.row(v);
        set.iter().map(|&s| row[s]).min().unwrap_or(UNREACHABLE)
    }
}

/// Single- or multi-source BFS; unreached vertices get `UNREACHABLE`.
pub fn bfs(g: &ColoredGraph, sources: impl IntoIterator<Item = Vertex>) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    for s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = du;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs_hop_distances(g: &ColoredGraph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs(g, [s]));
    }
    DistanceMatrix { n, d }
}

/// `NN(v, S)`: members of `set` at minimum hop distance from `v`, ascending.
pub fn nearest_neighbors(dist: &DistanceMatrix, v: Vertex, set: &[Vertex]) -> Result<Vec<Vertex>> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    let best = dist.to_set(v, set);
    let mut out: Vec<Vertex> = set.iter().copied().filter(|&s| dist.get(v, s) == best).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> ColoredGraph {
        ColoredGraph::new(2, vec![1, 1, 2, 2], &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn path_distances() {
        let d = all_pairs_hop_distances(&path4());
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(3, 0), 3);
        for v in 0..4 {
            assert_eq!(d.get(v, v), 0);
        }
        assert_eq!(d.get(1, 2), 1);
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = ColoredGraph::new(1, vec![1; 3], &[(0, 1)]).unwrap();
        let d = all_pairs_hop_distances(&g);
        assert_eq!(d.get(0, 2), UNREACHABLE);
        assert_eq!(d.get(1, 0), 1);
    }

    #[test]
    fn nearest_neighbor_sets() {
        let g = path4();
        let d = all_pairs_hop_distances(&g);
        assert_eq!(nearest_neighbors(&d, 1, &[0, 2]).unwrap(), vec![0, 2]);
        assert_eq!(nearest_neighbors(&d, 2, &[2, 0]).unwrap(), vec![2]);
        assert_eq!(nearest_neighbors(&d, 0, &[]), Err(Error::EmptySubset));

        let star = ColoredGraph::new(2, vec![1, 2, 2, 2], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ds = all_pairs_hop_distances(&star);
        assert_eq!(nearest_neighbors(&ds, 0, &[1, 2, 3]).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn multi_source_bfs_is_min_of_single_sources() {
        let g = path4();
        let d = all_pairs_hop_distances(&g);
        let multi = bfs(&g, [0, 3]);
        for (v, &dist) in multi.iter().enumerate() {
            assert_eq!(dist, d.get(v, 0).min(d.get(v, 3)));
        }
    }
}
