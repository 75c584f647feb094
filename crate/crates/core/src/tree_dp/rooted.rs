use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Vertex};

use super::color_set::ColorSet;

/// A colored tree with a fixed root and fixed (ascending id) child order.
///
/// `T_i(v)` below means `v` together with the subtrees of its first `i`
/// children.
#[derive(Debug, Clone)]
pub struct RootedTree<'g> {
    graph: &'g ColoredGraph,
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    child_index: Vec<usize>,
    subtree_size: Vec<usize>,
    height: Vec<u32>,
    /// `prefix_height[v][i]`: largest distance from `v` inside `T_i(v)`.
    prefix_height: Vec<Vec<u32>>,
    /// `prefix_colors[v][i]`: colors occurring in `T_i(v)`.
    prefix_colors: Vec<Vec<ColorSet>>,
}

pub fn root_tree(g: &ColoredGraph, root: Vertex) -> Result<RootedTree<'_>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: root, n: g.n() });
    }
    if g.num_colors() > ColorSet::MAX_COLORS {
        return Err(Error::TooManyColors { colors: g.num_colors(), max: ColorSet::MAX_COLORS });
    }
    let n = g.n();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut child_index = vec![0; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        // neighbor lists are sorted, so children come out ascending
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                child_index[w] = children[u].len();
                children[u].push(w);
                queue.push_back(w);
            }
        }
    }

    let mut subtree_size = vec![1; n];
    let mut height = vec![0u32; n];
    let mut prefix_height = vec![Vec::new(); n];
    let mut prefix_colors = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut ph = Vec::with_capacity(children[v].len() + 1);
        let mut pc = Vec::with_capacity(children[v].len() + 1);
        let (mut h, mut cs) = (0, ColorSet::single(g.color(v)));
        ph.push(h);
        pc.push(cs);
        for &c in &children[v] {
            subtree_size[v] += subtree_size[c];
            h = h.max(height[c] + 1);
            cs = cs | *prefix_colors[c].last().unwrap();
            ph.push(h);
            pc.push(cs);
        }
        height[v] = h;
        prefix_height[v] = ph;
        prefix_colors[v] = pc;
    }

    Ok(RootedTree { graph: g, root, parent, children, child_index, subtree_size, height, prefix_height, prefix_colors })
}

impl<'g> RootedTree<'g> {
    pub fn graph(&self) -> &'g ColoredGraph {
        self.graph
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn num_children(&self, v: Vertex) -> usize {
        self.children[v].len()
    }

    /// Position of `v` in its parent's child list (0 for the root).
    pub fn child_index(&self, v: Vertex) -> usize {
        self.child_index[v]
    }

    pub fn subtree_size(&self, v: Vertex) -> usize {
        self.subtree_size[v]
    }

    /// 0 for leaves, else one more than the tallest child.
    pub fn height(&self, v: Vertex) -> u32 {
        self.height[v]
    }

    pub fn prefix_height(&self, v: Vertex, i: usize) -> u32 {
        self.prefix_height[v][i]
    }

    pub fn subtree_colors(&self, v: Vertex) -> ColorSet {
        *self.prefix_colors[v].last().unwrap()
    }

    pub fn prefix_colors(&self, v: Vertex, i: usize) -> ColorSet {
        self.prefix_colors[v][i]
    }

    /// Vertices of the subtree rooted at `v`, preorder.
    pub fn subtree_vertices(&self, v: Vertex) -> Vec<Vertex> {
        self.prefix_vertices(v, self.num_children(v))
    }

    /// Vertices of `T_i(v)`, preorder.
    pub fn prefix_vertices(&self, v: Vertex, i: usize) -> Vec<Vertex> {
        let mut out = vec![v];
        let mut stack: Vec<Vertex> = self.children[v][..i].iter().rev().copied().collect();
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        out
    }

    /// Number of `(v, i)` prefixes with `i >= 1`, i.e. the sum of child counts.
    pub fn total_children(&self) -> usize {
        self.n() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> ColoredGraph {
        ColoredGraph::new(2, vec![1, 1, 2, 2], &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn path_rooted_at_an_end() {
        let g = path4();
        let t = root_tree(&g, 0).unwrap();
        assert_eq!(t.children(0), &[1]);
        assert_eq!(t.children(1), &[2]);
        assert_eq!(t.children(2), &[3]);
        assert_eq!(t.height(0), 3);
        assert_eq!(t.subtree_size(1), 3);
        assert_eq!(t.subtree_colors(2), ColorSet::single(2));
    }

    #[test]
    fn path_rooted_inside_orders_children() {
        let g = path4();
        let t = root_tree(&g, 1).unwrap();
        assert_eq!(t.children(1), &[0, 2]);
        assert_eq!(t.child_index(2), 1);
        assert_eq!(t.parent(0), Some(1));
        assert_eq!(t.prefix_height(1, 1), 1);
        assert_eq!(t.prefix_height(1, 2), 2);
        assert_eq!(t.prefix_vertices(1, 1), vec![1, 0]);
        assert_eq!(t.subtree_vertices(1), vec![1, 0, 2, 3]);
    }

    #[test]
    fn star() {
        let g = ColoredGraph::new(2, vec![1, 2, 2, 2], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = root_tree(&g, 0).unwrap();
        assert_eq!(t.num_children(0), 3);
        assert!((1..4).all(|l| t.height(l) == 0));
        assert_eq!(t.prefix_colors(0, 0), ColorSet::single(1));
        assert_eq!(t.prefix_colors(0, 1), ColorSet::from_colors([1, 2]));
    }

    #[test]
    fn rejects_non_trees() {
        let cycle = ColoredGraph::new(1, vec![1; 3], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(root_tree(&cycle, 0), Err(Error::NotATree)));
        let forest = ColoredGraph::new(1, vec![1; 3], &[(0, 1)]).unwrap();
        assert!(matches!(root_tree(&forest, 0), Err(Error::NotATree)));
    }
}
