//! Generators for the hardness constructions, each with the forward
//! certificate that turns a source solution into a target subset.
//!
//! | name         | source               | target                  | bound    |
//! |--------------|----------------------|-------------------------|----------|
//! | `ds-mcs`     | dominating set       | MCS, apex vertex        | k+1      |
//! | `2sat-tree`  | MAX-2SAT             | MCS on a tree           | N(k)     |
//! | `vc-interval`| cubic vertex cover   | MCS on an interval graph| k(3+p)   |
//! | `sc-mscs`    | set cover            | MSCS                    | k+1      |
//! | `ds-mscs`    | dominating set       | MSCS, pendant paths     | n+k      |

pub mod dominating;
pub mod interval;
pub mod max2sat;
pub mod planar;
pub mod set_cover;

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind, Result};
use crate::graph::Vertex;

pub use dominating::{dominating_certificate, dominating_to_mcs, DominatingReduction};
pub use interval::{
    interval_cover_certificate, intervals_to_graph, predicted_adjacency, vc_to_intervals, Interval, IntervalInstance,
    IntervalRole,
};
pub use max2sat::{assignment_certificate, max2sat_to_tree, Literal, Max2SatTree, TreeReductionLayout, TwoSatFormula};
pub use planar::{ds_mscs_certificate, ds_planar_to_mscs, PendantLayout, PlanarReduction};
pub use set_cover::{setcover_certificate, setcover_to_mscs, SetCoverInstance, SetCoverLayout, SetCoverReduction};

/// Target-size bound as a function of the source solution size `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeFormula {
    /// `k + 1`
    PlusOne,
    /// `N(k) = n(M+2) + 2k + 3(m-k) + 1`
    TreeGadgets { vars: u64, clauses: u64, stabilizers: u64 },
    /// `K = k(3 + p)`
    IntervalGadgets { per_gadget_small: u64 },
    /// `n + k`
    PlusVertices { n: u64 },
}

impl SizeFormula {
    pub fn target_bound(&self, k: u64) -> u64 {
        match *self {
            SizeFormula::PlusOne => k + 1,
            SizeFormula::TreeGadgets { vars, clauses, stabilizers } => {
                assert!(k <= clauses, "more satisfied clauses than clauses");
                vars * (stabilizers + 2) + 2 * k + 3 * (clauses - k) + 1
            }
            SizeFormula::IntervalGadgets { per_gadget_small } => k * (3 + per_gadget_small),
            SizeFormula::PlusVertices { n } => n + k,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            SizeFormula::PlusOne => "k+1",
            SizeFormula::TreeGadgets { .. } => "N(k)=n*(M+2)+2k+3(m-k)+1",
            SizeFormula::IntervalGadgets { .. } => "K=k*(3+p)",
            SizeFormula::PlusVertices { .. } => "n+k",
        }
    }
}

/// Sidecar description of a generated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMetadata {
    pub reduction: String,
    /// Source parameters in output order.
    pub params: Vec<(String, String)>,
    pub formula: SizeFormula,
    /// Labeled gadget vertices (0-based).
    pub roles: Vec<(String, Vertex)>,
}

impl ReductionMetadata {
    pub(crate) fn new(reduction: &str, formula: SizeFormula) -> Self {
        ReductionMetadata { reduction: reduction.to_string(), params: Vec::new(), formula, roles: Vec::new() }
    }

    pub(crate) fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub(crate) fn role(&mut self, name: impl Into<String>, v: Vertex) {
        self.roles.push((name.into(), v));
    }

    pub fn role_vertex(&self, name: &str) -> Option<Vertex> {
        self.roles.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// `key=value` lines, then `formula=`, then one `role <name> <id>` line
    /// per labeled vertex (1-based ids).
    pub fn to_text(&self) -> String {
        let mut out = format!("reduction={}\n", self.reduction);
        for (k, v) in &self.params {
            let _ = writeln!(out, "{k}={v}");
        }
        let _ = writeln!(out, "formula={}", self.formula.describe());
        for (name, v) in &self.roles {
            let _ = writeln!(out, "role {name} {}", v + 1);
        }
        out
    }
}

/// Parsed sidecar: keys and roles as written, ids back to 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MetadataText {
    pub entries: Vec<(String, String)>,
    pub roles: Vec<(String, Vertex)>,
}

impl MetadataText {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

pub fn parse_metadata(text: &str) -> Result<MetadataText> {
    let mut meta = MetadataText::default();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("role ") {
            let mut toks = rest.split_whitespace();
            let (Some(name), Some(id), None) = (toks.next(), toks.next(), toks.next()) else {
                return Err(ParseError::new(line_no, ParseErrorKind::MalformedLine).into());
            };
            let id = crate::format::number(line_no, id)?;
            if id == 0 {
                return Err(ParseError::new(line_no, ParseErrorKind::VertexOutOfRange(0)).into());
            }
            meta.roles.push((name.to_string(), id as usize - 1));
        } else if let Some((k, v)) = line.split_once('=') {
            meta.entries.push((k.to_string(), v.to_string()));
        } else {
            return Err(ParseError::new(line_no, ParseErrorKind::MalformedLine).into());
        }
    }
    Ok(meta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        let tree = SizeFormula::TreeGadgets { vars: 3, clauses: 4, stabilizers: 27 };
        assert_eq!(tree.target_bound(4), 96);
        assert_eq!(SizeFormula::IntervalGadgets { per_gadget_small: 64 }.target_bound(3), 201);
        assert_eq!(SizeFormula::PlusOne.target_bound(2), 3);
        assert_eq!(SizeFormula::PlusVertices { n: 2 }.target_bound(1), 3);
    }

    #[test]
    fn metadata_text_round_trip() {
        let mut meta = ReductionMetadata::new("sc-mscs", SizeFormula::PlusOne).param("n", 4).param("m", 3);
        meta.role("r1", 7);
        let text = meta.to_text();
        assert_eq!(text, "reduction=sc-mscs\nn=4\nm=3\nformula=k+1\nrole r1 8\n");
        let back = parse_metadata(&text).unwrap();
        assert_eq!(back.get("m"), Some("3"));
        assert_eq!(back.get("formula"), Some("k+1"));
        assert_eq!(back.roles, vec![("r1".to_string(), 7)]);
        assert!(parse_metadata("junk\n").is_err());
    }
}
