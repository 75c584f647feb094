//! Cubic vertex cover to consistent subset on interval graphs.
//!
//! Vertex `v_i` (1-based) owns the gadget region `[2i, 2i+1]`: one medium
//! interval per incident edge spanning the region exactly (color = edge
//! index), plus `p` small disjoint intervals of color `m+1` strictly
//! inside. Each gap `(2i+1, 2i+2)` holds `q` more small intervals, and one
//! large interval of color 1 spans everything.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::certificate::{Certificate, Provenance};
use crate::consistency::Variant;
use crate::error::{Error, ParseError, ParseErrorKind as K, Result};
use crate::exact::is_vertex_cover;
use crate::format::{content_lines, number};
use crate::graph::{Color, ColoredGraph, Vertex};

use super::{ReductionMetadata, SizeFormula};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalRole {
    /// Medium interval of `edge` inside the gadget of `vertex`.
    Medium {
        edge: usize,
        vertex: Vertex,
    },
    GadgetSmall {
        vertex: Vertex,
        index: usize,
    },
    /// Small interval in the gap to the right of gadget `gap`.
    GapSmall {
        gap: usize,
        index: usize,
    },
    Large,
    /// Read from a file without role information.
    Unlabeled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub color: Color,
    pub lo: Rational,
    pub hi: Rational,
    pub role: IntervalRole,
}

impl Interval {
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalInstance {
    /// Interval `j` becomes vertex `j`.
    pub intervals: Vec<Interval>,
    pub num_colors: usize,
    pub p: usize,
    pub q: usize,
}

impl IntervalInstance {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// `p = None` uses `n³`, `q = None` uses `n⁴`.
pub fn vc_to_intervals(
    g: &ColoredGraph,
    p: Option<usize>,
    q: Option<usize>,
) -> Result<(IntervalInstance, ReductionMetadata)> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
    }
    let p = p.unwrap_or(n.pow(3));
    let q = q.unwrap_or(n.pow(4));
    let edges = g.edges();
    let m = edges.len();
    let small_color = (m + 1) as Color;
    let eps = Rational::new(1, 4 * (n as i64).pow(3));
    let r = |a: i64| Rational::from_integer(a);

    let mut intervals = Vec::with_capacity(2 * m + n * (p + q) + 1);
    for v in 0..n {
        let base = r(2 * (v as i64 + 1));
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a == v || b == v {
                intervals.push(Interval {
                    color: (e + 1) as Color,
                    lo: base,
                    hi: base + 1,
                    role: IntervalRole::Medium { edge: e, vertex: v },
                });
            }
        }
    }
    let smalls = |base: Rational, count: usize, role: &dyn Fn(usize) -> IntervalRole, out: &mut Vec<Interval>| {
        let slots = count as i64 + 1;
        let width = eps.min(Rational::new(1, 2 * slots));
        for j in 0..count {
            let center = base + Rational::new(j as i64 + 1, slots);
            out.push(Interval { color: small_color, lo: center - width / 2, hi: center + width / 2, role: role(j) });
        }
    };
    for v in 0..n {
        smalls(r(2 * (v as i64 + 1)), p, &|index| IntervalRole::GadgetSmall { vertex: v, index }, &mut intervals);
    }
    for gap in 0..n {
        smalls(r(2 * (gap as i64 + 1) + 1), q, &|index| IntervalRole::GapSmall { gap, index }, &mut intervals);
    }
    intervals.push(Interval { color: 1, lo: r(1), hi: r(2 * n as i64 + 3), role: IntervalRole::Large });

    let instance = IntervalInstance { intervals, num_colors: m + 1, p, q };
    let mut metadata =
        ReductionMetadata::new("vc-interval", SizeFormula::IntervalGadgets { per_gadget_small: p as u64 })
            .param("n", n)
            .param("m", m)
            .param("p", p)
            .param("q", q);
    for (id, iv) in instance.intervals.iter().enumerate() {
        match iv.role {
            IntervalRole::Medium { edge, vertex } => metadata.role(format!("medium_{}_{}", edge + 1, vertex + 1), id),
            IntervalRole::Large => metadata.role("large", id),
            _ => {}
        }
    }
    Ok((instance, metadata))
}

/// Vertex per interval, edge iff the closed intervals intersect.
pub fn intervals_to_graph(ii: &IntervalInstance) -> Result<ColoredGraph> {
    let mut order: Vec<usize> = (0..ii.len()).collect();
    order.sort_by(|&a, &b| (ii.intervals[a].lo, ii.intervals[a].hi).cmp(&(ii.intervals[b].lo, ii.intervals[b].hi)));
    let mut active: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    for &j in &order {
        let lo = ii.intervals[j].lo;
        active.retain(|&a| ii.intervals[a].hi >= lo);
        edges.extend(active.iter().map(|&a| (a, j)));
        active.push(j);
    }
    let colors = ii.intervals.iter().map(|iv| iv.color).collect();
    ColoredGraph::new(ii.num_colors, colors, &edges)
}

/// Adjacency implied by the roles alone, as sorted `(u, w)` pairs with
/// `u < w`.
pub fn predicted_adjacency(ii: &IntervalInstance) -> Vec<(Vertex, Vertex)> {
    use IntervalRole::*;
    let gadget = |role: IntervalRole| match role {
        Medium { vertex, .. } | GadgetSmall { vertex, .. } => Some(vertex),
        _ => None,
    };
    let mut out = Vec::new();
    for a in 0..ii.len() {
        for b in a + 1..ii.len() {
            let (ra, rb) = (ii.intervals[a].role, ii.intervals[b].role);
            let adjacent = match (ra, rb) {
                (Large, _) | (_, Large) => true,
                (Medium { vertex: u, .. }, _) | (_, Medium { vertex: u, .. }) => {
                    gadget(ra) == gadget(rb) && gadget(ra) == Some(u)
                }
                _ => false,
            };
            if adjacent {
                out.push((a, b));
            }
        }
    }
    out
}

/// Every interval of the gadgets of the cover vertices.
pub fn interval_cover_certificate(ii: &IntervalInstance, g: &ColoredGraph, cover: &[Vertex]) -> Result<Certificate> {
    g.check_subset(cover)?;
    if !is_vertex_cover(g, cover) {
        return Err(Error::InvalidInput("not a vertex cover".into()));
    }
    let mut chosen = vec![false; g.n()];
    for &v in cover {
        chosen[v] = true;
    }
    let witness = ii
        .intervals
        .iter()
        .enumerate()
        .filter(|(_, iv)| match iv.role {
            IntervalRole::Medium { vertex, .. } | IntervalRole::GadgetSmall { vertex, .. } => chosen[vertex],
            _ => false,
        })
        .map(|(id, _)| id)
        .collect();
    Certificate::new(Variant::Mcs, witness, Provenance::Constructed)
}

/// One `i <id> <color> <lo_num>/<lo_den> <hi_num>/<hi_den>` line per
/// interval, ids 1-based.
pub fn write_intervals(ii: &IntervalInstance) -> String {
    let mut out = String::new();
    for (id, iv) in ii.intervals.iter().enumerate() {
        let _ = writeln!(
            out,
            "i {} {} {}/{} {}/{}",
            id + 1,
            iv.color,
            iv.lo.numer(),
            iv.lo.denom(),
            iv.hi.numer(),
            iv.hi.denom()
        );
    }
    out
}

/// Parses the interval format. Ids must run `1..=count` in order; roles
/// come back as `Unlabeled`, and the color count is the largest color.
pub fn parse_intervals(text: &str) -> Result<IntervalInstance> {
    let mut intervals = Vec::new();
    for (line, toks) in content_lines(text) {
        if toks[0] != "i" {
            return Err(ParseError::new(line, K::UnknownLineType(toks[0].to_string())).into());
        }
        if toks.len() != 5 {
            return Err(ParseError::new(line, K::MalformedLine).into());
        }
        let id = number(line, toks[1])?;
        if id as usize != intervals.len() + 1 {
            return Err(ParseError::new(line, K::NotIncreasing).into());
        }
        let color = number(line, toks[2])?;
        if color == 0 || color > u64::from(Color::MAX) {
            return Err(ParseError::new(line, K::ColorOutOfRange(color)).into());
        }
        let lo = rational(line, toks[3])?;
        let hi = rational(line, toks[4])?;
        if lo >= hi {
            return Err(ParseError::new(line, K::MalformedLine).into());
        }
        intervals.push(Interval { color: color as Color, lo, hi, role: IntervalRole::Unlabeled });
    }
    let num_colors = intervals.iter().map(|iv| iv.color as usize).max().unwrap_or(1);
    Ok(IntervalInstance { intervals, num_colors, p: 0, q: 0 })
}

fn rational(line: usize, tok: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::new(line, K::InvalidNumber(tok.to_string()));
    let (num, den) = tok.split_once('/').ok_or_else(bad)?;
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consistency::is_consistent;

    pub(crate) fn k4() -> ColoredGraph {
        ColoredGraph::new(1, vec![1; 4], &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn unit(color: Color, lo: i64, hi: i64) -> Interval {
        Interval { color, lo: Rational::from(lo), hi: Rational::from(hi), role: IntervalRole::Unlabeled }
    }

    #[test]
    fn sweep_basics() {
        let ii = IntervalInstance { intervals: vec![unit(1, 0, 1), unit(2, 2, 3)], num_colors: 2, p: 0, q: 0 };
        assert_eq!(intervals_to_graph(&ii).unwrap().num_edges(), 0);
        let nested = IntervalInstance { intervals: vec![unit(1, 0, 10), unit(2, 2, 3)], num_colors: 2, p: 0, q: 0 };
        assert!(intervals_to_graph(&nested).unwrap().has_edge(0, 1));
        let touching = IntervalInstance { intervals: vec![unit(1, 0, 2), unit(2, 2, 3)], num_colors: 2, p: 0, q: 0 };
        assert!(intervals_to_graph(&touching).unwrap().has_edge(0, 1));
    }

    #[test]
    fn k4_small_parameters() {
        let g = k4();
        let (ii, meta) = vc_to_intervals(&g, Some(1), Some(1)).unwrap();
        assert_eq!(ii.len(), 12 + 4 + 4 + 1);
        assert_eq!(intervals_to_graph(&ii).unwrap().edges(), predicted_adjacency(&ii));
        assert_eq!(meta.formula.target_bound(3), 12);
        let cert = interval_cover_certificate(&ii, &g, &[0, 1, 2]).unwrap();
        assert_eq!(cert.size(), 12);
        assert!(is_consistent(&intervals_to_graph(&ii).unwrap(), cert.witness()).unwrap());
        assert!(interval_cover_certificate(&ii, &g, &[0, 1]).is_err());
    }

    #[test]
    fn k4_defaults() {
        let (ii, _) = vc_to_intervals(&k4(), None, None).unwrap();
        assert_eq!((ii.p, ii.q), (64, 256));
        assert_eq!(ii.len(), 1293);
        assert!(ii.intervals.iter().all(|iv| iv.lo < iv.hi));
    }

    #[test]
    fn rejects_non_cubic() {
        let p3 = ColoredGraph::new(1, vec![1; 3], &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(vc_to_intervals(&p3, None, None), Err(Error::NotCubic { vertex: 0, degree: 1 })));
    }

    #[test]
    fn text_round_trip() {
        let (ii, _) = vc_to_intervals(&k4(), Some(2), Some(1)).unwrap();
        let text = write_intervals(&ii);
        assert!(text.starts_with("i 1 1 2/1 3/1\n"));
        let back = parse_intervals(&text).unwrap();
        assert_eq!(back.len(), ii.len());
        assert_eq!(intervals_to_graph(&back).unwrap().edges(), intervals_to_graph(&ii).unwrap().edges());
        assert!(parse_intervals("i 2 1 0/1 1/1\n").is_err());
        assert!(parse_intervals("i 1 1 1/1 0/1\n").is_err());
        assert!(parse_intervals("i 1 1 0/0 1/1\n").is_err());
    }
}
