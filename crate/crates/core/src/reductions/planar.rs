//! Dominating set (planar) to strict consistent subset: each vertex `v`
//! gets a pendant path `v - r1(v) - b1(v) - b2(v) - b3(v)`. Original
//! vertices and `r1` are red, the `b` vertices blue. Planarity is not
//! checked.

use crate::certificate::{Certificate, Provenance};
use crate::consistency::Variant;
use crate::error::{Error, Result};
use crate::exact::is_dominating;
use crate::graph::{Color, ColoredGraph, Vertex};

use super::{ReductionMetadata, SizeFormula};

pub const RED: Color = 1;
pub const BLUE: Color = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantLayout {
    pub r1: Vec<Vertex>,
    pub b1: Vec<Vertex>,
    pub b2: Vec<Vertex>,
    pub b3: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub struct PlanarReduction {
    pub graph: ColoredGraph,
    pub layout: PendantLayout,
    pub metadata: ReductionMetadata,
}

/// Vertex order: the original vertices, then `r1, b1, b2, b3` per vertex.
pub fn ds_planar_to_mscs(g: &ColoredGraph) -> Result<PlanarReduction> {
    g.require_connected()?;
    let n = g.n();
    let chain = |v: Vertex, j: usize| n + 4 * v + j;
    let layout = PendantLayout {
        r1: (0..n).map(|v| chain(v, 0)).collect(),
        b1: (0..n).map(|v| chain(v, 1)).collect(),
        b2: (0..n).map(|v| chain(v, 2)).collect(),
        b3: (0..n).map(|v| chain(v, 3)).collect(),
    };
    let mut edges = g.edges();
    let mut colors = vec![RED; n];
    for v in 0..n {
        edges.extend([
            (v, chain(v, 0)),
            (chain(v, 0), chain(v, 1)),
            (chain(v, 1), chain(v, 2)),
            (chain(v, 2), chain(v, 3)),
        ]);
        colors.extend([RED, BLUE, BLUE, BLUE]);
    }
    let graph = ColoredGraph::new(2, colors, &edges)?;
    let mut metadata = ReductionMetadata::new("ds-mscs", SizeFormula::PlusVertices { n: n as u64 })
        .param("n", n)
        .param("edges", g.num_edges());
    for v in 0..n {
        for (j, name) in ["r1", "b1", "b2", "b3"].iter().enumerate() {
            metadata.role(format!("{name}_{}", v + 1), chain(v, j));
        }
    }
    Ok(PlanarReduction { graph, layout, metadata })
}

/// `{v, b2(v) : v in D} ∪ {b3(v) : v not in D}`.
pub fn ds_mscs_certificate(layout: &PendantLayout, g: &ColoredGraph, dominating: &[Vertex]) -> Result<Certificate> {
    g.check_subset(dominating)?;
    if !is_dominating(g, dominating) {
        return Err(Error::InvalidInput("not a dominating set".into()));
    }
    let mut in_d = vec![false; g.n()];
    for &v in dominating {
        in_d[v] = true;
    }
    let mut witness = Vec::new();
    for (v, &chosen) in in_d.iter().enumerate() {
        if chosen {
            witness.extend([v, layout.b2[v]]);
        } else {
            witness.push(layout.b3[v]);
        }
    }
    Certificate::new(Variant::Mscs, witness, Provenance::Constructed)
}
