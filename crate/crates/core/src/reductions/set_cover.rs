//! Set cover to strict consistent subset: blue element vertices, a blue
//! clique of set vertices joined to their elements, a red `r1` adjacent to
//! every element and a red pendant `r2` on `r1`.

use std::fmt::Write as _;

use crate::certificate::{Certificate, Provenance};
use crate::consistency::Variant;
use crate::error::{Error, ParseError, ParseErrorKind as K, Result};
use crate::format::{content_lines, number};
use crate::graph::{Color, ColoredGraph, Vertex};

use super::{ReductionMetadata, SizeFormula};

pub const BLUE: Color = 1;
pub const RED: Color = 2;

/// Elements are `0..n`; every element lies in some set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(n: usize, mut sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut covered = vec![false; n];
        for set in &mut sets {
            set.sort_unstable();
            set.dedup();
            for &e in set.iter() {
                if e >= n {
                    return Err(Error::InvalidInput(format!("element {} outside 1..={n}", e + 1)));
                }
                covered[e] = true;
            }
        }
        if let Some(e) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidInput(format!("element {} is in no set", e + 1)));
        }
        Ok(SetCoverInstance { n, sets })
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.n];
        for &j in chosen {
            for &e in &self.sets[j] {
                covered[e] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// `p sc <n> <m>` then `s <id> <e1> <e2> ...` for each set id `1..=m`.
pub fn parse_set_cover(text: &str) -> Result<SetCoverInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::new(1, K::MissingHeader))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "sc" {
        return Err(ParseError::new(hline, K::MalformedHeader).into());
    }
    let n = number(hline, header[2])? as usize;
    let m = number(hline, header[3])? as usize;
    let mut sets: Vec<Option<Vec<usize>>> = vec![None; m];
    for (line, toks) in lines {
        if toks[0] != "s" {
            return Err(ParseError::new(line, K::UnknownLineType(toks[0].to_string())).into());
        }
        if toks.len() < 2 {
            return Err(ParseError::new(line, K::MalformedLine).into());
        }
        let id = number(line, toks[1])?;
        if id == 0 || id as usize > m {
            return Err(ParseError::new(line, K::VertexOutOfRange(id)).into());
        }
        let mut elems = Vec::with_capacity(toks.len() - 2);
        for tok in &toks[2..] {
            let e = number(line, tok)?;
            if e == 0 || e as usize > n {
                return Err(ParseError::new(line, K::VertexOutOfRange(e)).into());
            }
            elems.push(e as usize - 1);
        }
        if sets[id as usize - 1].replace(elems).is_some() {
            return Err(ParseError::new(line, K::DuplicateColor(id)).into());
        }
    }
    let found = sets.iter().filter(|s| s.is_some()).count();
    if found != m {
        let eof = text.lines().count();
        return Err(ParseError::new(eof, K::CountMismatch { what: "sets", declared: m, found }).into());
    }
    SetCoverInstance::new(n, sets.into_iter().map(Option::unwrap).collect())
}

pub fn write_set_cover(sc: &SetCoverInstance) -> String {
    let mut out = format!("p sc {} {}\n", sc.n, sc.sets.len());
    for (j, set) in sc.sets.iter().enumerate() {
        let _ = write!(out, "s {}", j + 1);
        for e in set {
            let _ = write!(out, " {}", e + 1);
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverLayout {
    pub elements: Vec<Vertex>,
    pub sets: Vec<Vertex>,
    pub r1: Vertex,
    pub r2: Vertex,
}

#[derive(Debug, Clone)]
pub struct SetCoverReduction {
    pub graph: ColoredGraph,
    pub layout: SetCoverLayout,
    pub metadata: ReductionMetadata,
}

/// Vertex order: elements, sets, `r1`, `r2`.
pub fn setcover_to_mscs(sc: &SetCoverInstance) -> Result<SetCoverReduction> {
    let (n, m) = (sc.n, sc.sets.len());
    let elements: Vec<Vertex> = (0..n).collect();
    let sets: Vec<Vertex> = (n..n + m).collect();
    let (r1, r2) = (n + m, n + m + 1);
    let mut edges = Vec::new();
    for (j, set) in sc.sets.iter().enumerate() {
        edges.extend(set.iter().map(|&e| (elements[e], sets[j])));
    }
    for a in 0..m {
        for b in a + 1..m {
            edges.push((sets[a], sets[b]));
        }
    }
    edges.extend(elements.iter().map(|&x| (x, r1)));
    edges.push((r1, r2));
    let mut colors = vec![BLUE; n + m];
    colors.extend([RED, RED]);
    let graph = ColoredGraph::new(2, colors, &edges)?;

    let mut metadata = ReductionMetadata::new("sc-mscs", SizeFormula::PlusOne).param("n", n).param("m", m);
    for (i, &x) in elements.iter().enumerate() {
        metadata.role(format!("x_{}", i + 1), x);
    }
    for (j, &y) in sets.iter().enumerate() {
        metadata.role(format!("y_{}", j + 1), y);
    }
    metadata.role("r1", r1);
    metadata.role("r2", r2);
    Ok(SetCoverReduction { graph, layout: SetCoverLayout { elements, sets, r1, r2 }, metadata })
}

/// The chosen set vertices plus `r2`.
pub fn setcover_certificate(layout: &SetCoverLayout, sc: &SetCoverInstance, cover: &[usize]) -> Result<Certificate> {
    if cover.iter().any(|&j| j >= sc.sets.len()) || !sc.is_cover(cover) {
        return Err(Error::InvalidInput("not a set cover".into()));
    }
    let mut witness: Vec<Vertex> = cover.iter().map(|&j| layout.sets[j]).collect();
    witness.push(layout.r2);
    Certificate::new(Variant::Mscs, witness, Provenance::Constructed)
}
