//! Vertex-colored simple undirected graphs.
//!
//! Vertices are `0..n` inside the library. Text formats and the CLI use
//! ids `1..=n`; conversion happens only at the I/O boundary.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Color ids are `1..=num_colors`.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    adj: Vec<Vec<Vertex>>,
    colors: Vec<Color>,
    num_colors: usize,
    num_edges: usize,
}

impl ColoredGraph {
    /// Builds a graph from a color per vertex and an edge list.
    ///
    /// Rejects self-loops, repeated edges, out-of-range endpoints and
    /// colors outside `1..=num_colors`. Color classes may be empty.
    pub fn new(num_colors: usize, colors: Vec<Color>, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let n = colors.len();
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c as usize > num_colors {
                return Err(Error::ColorOutOfRange { vertex: v, color: c, num_colors });
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, w) in edges {
            for x in [u, w] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == w {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(w), u.max(w))) {
                return Err(Error::DuplicateEdge(u, w));
            }
            adj[u].push(w);
            adj[w].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(ColoredGraph { adj, colors, num_colors, num_edges: edges.len() })
    }

    /// Same graph with every vertex recolored to color 1.
    pub fn monochrome(&self) -> ColoredGraph {
        ColoredGraph { adj: self.adj.clone(), colors: vec![1; self.n()], num_colors: 1, num_edges: self.num_edges }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, w: Vertex) -> bool {
        self.adj[u].binary_search(&w).is_ok()
    }

    /// Edges as `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.num_edges);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&w| w > u).map(|&w| (u, w)));
        }
        out
    }

    /// Colors that actually occur, ascending.
    pub fn used_colors(&self) -> Vec<Color> {
        let mut cs = self.colors.clone();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.num_edges + 1 == self.n() && self.is_connected()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Checks that `subset` is nonempty and inside the vertex range.
    pub(crate) fn check_subset(&self, subset: &[Vertex]) -> Result<()> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&v) = subset.iter().find(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }
}

/// Partition into maximal connected monochromatic vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks {
    pub partition: Vec<Vec<Vertex>>,
    pub block_of: Vec<usize>,
}

impl Blocks {
    pub fn len(&self) -> usize {
        self.partition.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partition.is_empty()
    }

    /// True when `subset` has a vertex in every block.
    pub fn hits_all(&self, subset: &[Vertex]) -> bool {
        let mut hit = vec![false; self.partition.len()];
        for &v in subset {
            hit[self.block_of[v]] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// Blocks are numbered in order of their smallest vertex; each block's
/// vertex list is ascending.
pub fn blocks(g: &ColoredGraph) -> Blocks {
    let n = g.n();
    let mut block_of = vec![usize::MAX; n];
    let mut partition = Vec::new();
    for start in 0..n {
        if block_of[start] != usize::MAX {
            continue;
        }
        let id = partition.len();
        let color = g.color(start);
        let mut members = vec![start];
        block_of[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if block_of[w] == usize::MAX && g.color(w) == color {
                    block_of[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        partition.push(members);
    }
    Blocks { partition, block_of }
}
