//! Dominating set to consistent subset: every original vertex gets color 1
//! and a new apex `x` of color 2 is joined to all of them.

use crate::certificate::{Certificate, Provenance};
use crate::consistency::Variant;
use crate::error::{Error, Result};
use crate::exact::is_dominating;
use crate::graph::{ColoredGraph, Vertex};

use super::{ReductionMetadata, SizeFormula};

#[derive(Debug, Clone)]
pub struct DominatingReduction {
    pub graph: ColoredGraph,
    /// The apex, always the last vertex.
    pub apex: Vertex,
    pub metadata: ReductionMetadata,
}

pub fn dominating_to_mcs(g: &ColoredGraph) -> Result<DominatingReduction> {
    g.require_connected()?;
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, n)));
    let mut colors = vec![1; n];
    colors.push(2);
    let graph = ColoredGraph::new(2, colors, &edges)?;
    let mut metadata =
        ReductionMetadata::new("ds-mcs", SizeFormula::PlusOne).param("n", n).param("edges", g.num_edges());
    metadata.role("x", n);
    Ok(DominatingReduction { graph, apex: n, metadata })
}

/// `D` plus the apex.
pub fn dominating_certificate(
    red: &DominatingReduction,
    g: &ColoredGraph,
    dominating: &[Vertex],
) -> Result<Certificate> {
    g.check_subset(dominating)?;
    if !is_dominating(g, dominating) {
        return Err(Error::InvalidInput("not a dominating set".into()));
    }
    let mut witness = dominating.to_vec();
    witness.push(red.apex);
    Certificate::new(Variant::Mcs, witness, Provenance::Constructed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::brute_force_mcs;

    fn path(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        ColoredGraph::new(1, vec![1; n], &edges).unwrap()
    }

    #[test]
    fn p3() {
        let g = path(3);
        let red = dominating_to_mcs(&g).unwrap();
        assert_eq!(red.graph.n(), 4);
        assert_eq!(red.graph.degree(3), 3);
        assert_eq!(brute_force_mcs(&red.graph).unwrap().size(), 2);
        let cert = dominating_certificate(&red, &g, &[1]).unwrap();
        assert!(cert.verify(&red.graph).unwrap());
        assert!(dominating_certificate(&red, &g, &[0]).is_err());
    }

    #[test]
    fn k4() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = ColoredGraph::new(1, vec![1; 4], &edges).unwrap();
        let red = dominating_to_mcs(&g).unwrap();
        assert_eq!(brute_force_mcs(&red.graph).unwrap().size(), 2);
    }
}
