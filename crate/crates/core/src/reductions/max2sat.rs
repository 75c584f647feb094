//! MAX-2SAT to consistent subset on trees.
//!
//! Per variable `i`: literal paths `x_i^1..4` and `xbar_i^1..4`, with `M`
//! stabilizer pairs `s_i^j` (on `x_i^1`) and `sbar_i^j` (on `xbar_i^1`).
//! Per clause: occurrence paths `y^1..7`, `z^1..7` colored like their
//! literals, and a `w^1..7` path with a fresh color. Everything hangs off
//! the central path `v1 - v2 - v3`.
//!
//! Colors: `c_i = 2i-1`, `cbar_i = 2i`, stabilizer pair `(i, j)` gets
//! `2n + (i-1)M + j`, clause `i` gets `2n + nM + i`, the central path
//! `2n + nM + m + 1`.

use std::fmt::Write as _;

use crate::certificate::{Certificate, Provenance};
use crate::consistency::Variant;
use crate::error::{Error, ParseError, ParseErrorKind as K, Result};
use crate::format::content_lines;
use crate::graph::{Color, ColoredGraph, Vertex};

use super::{ReductionMetadata, SizeFormula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }

    fn dimacs(&self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSatFormula {
    pub num_vars: usize,
    pub clauses: Vec<(Literal, Literal)>,
}

impl TwoSatFormula {
    pub fn new(num_vars: usize, clauses: Vec<(Literal, Literal)>) -> Result<Self> {
        for lit in clauses.iter().flat_map(|(a, b)| [a, b]) {
            if lit.var == 0 || lit.var > num_vars {
                return Err(Error::InvalidInput(format!("variable {} outside 1..={num_vars}", lit.var)));
            }
        }
        Ok(TwoSatFormula { num_vars, clauses })
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        self.clauses.iter().filter(|(a, b)| a.eval(assignment) || b.eval(assignment)).count()
    }

    /// Largest number of simultaneously satisfiable clauses, by trying
    /// every assignment.
    pub fn max_satisfiable(&self) -> usize {
        assert!(self.num_vars < 32, "too many variables to enumerate");
        (0u32..1 << self.num_vars)
            .map(|bits| self.satisfied_count(&assignment_from_bits(bits, self.num_vars)))
            .max()
            .unwrap_or(0)
    }
}

/// Bit `i` of `bits` is the value of variable `i + 1`.
pub fn assignment_from_bits(bits: u32, n: usize) -> Vec<bool> {
    (0..n).map(|i| bits >> i & 1 == 1).collect()
}

/// DIMACS CNF where every clause has exactly two literals.
pub fn parse_cnf(text: &str) -> Result<TwoSatFormula> {
    let mut lines = content_lines(text).filter(|(_, toks)| toks[0] != "%");
    let (hline, header) = lines.next().ok_or(ParseError::new(1, K::MissingHeader))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "cnf" {
        return Err(ParseError::new(hline, K::MalformedHeader).into());
    }
    let n = crate::format::number(hline, header[2])? as usize;
    let m = crate::format::number(hline, header[3])? as usize;
    let mut clauses = Vec::with_capacity(m);
    let mut pending: Vec<Literal> = Vec::new();
    let mut last_line = hline;
    for (line, toks) in lines {
        last_line = line;
        if toks[0] == "p" {
            return Err(ParseError::new(line, K::DuplicateHeader).into());
        }
        for tok in toks {
            let lit: i64 = tok.parse().map_err(|_| ParseError::new(line, K::InvalidNumber(tok.to_string())))?;
            if lit == 0 {
                if pending.len() != 2 {
                    return Err(ParseError::new(line, K::MalformedLine).into());
                }
                clauses.push((pending[0], pending[1]));
                pending.clear();
                continue;
            }
            let var = lit.unsigned_abs();
            if var as usize > n {
                return Err(ParseError::new(line, K::VertexOutOfRange(var)).into());
            }
            pending.push(Literal { var: var as usize, positive: lit > 0 });
        }
    }
    if !pending.is_empty() {
        return Err(ParseError::new(last_line, K::MalformedLine).into());
    }
    if clauses.len() != m {
        return Err(ParseError::new(
            last_line,
            K::CountMismatch { what: "clauses", declared: m, found: clauses.len() },
        )
        .into());
    }
    TwoSatFormula::new(n, clauses)
}

pub fn write_cnf(f: &TwoSatFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for (a, b) in &f.clauses {
        let _ = writeln!(out, "{} {} 0", a.dimacs(), b.dimacs());
    }
    out
}

/// Default stabilizer count `n³` (at least 1).
pub fn default_stabilizers(num_vars: usize) -> usize {
    num_vars.pow(3).max(1)
}

/// `N(k) = n(M+2) + 2k + 3(m-k) + 1`.
pub fn target_size(num_vars: usize, num_clauses: usize, stabilizers: usize, k: usize) -> usize {
    num_vars * (stabilizers + 2) + 2 * k + 3 * (num_clauses - k) + 1
}

/// `N(m) < (n+1)M`, the condition the stabilizers need to force polarity.
pub fn stabilizers_sufficient(num_vars: usize, num_clauses: usize, stabilizers: usize) -> bool {
    target_size(num_vars, num_clauses, stabilizers, num_clauses) < (num_vars + 1) * stabilizers
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeReductionLayout {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub stabilizers: usize,
    pub x: Vec<[Vertex; 4]>,
    pub xbar: Vec<[Vertex; 4]>,
    pub s: Vec<Vec<Vertex>>,
    pub sbar: Vec<Vec<Vertex>>,
    pub y: Vec<[Vertex; 7]>,
    pub z: Vec<[Vertex; 7]>,
    pub w: Vec<[Vertex; 7]>,
    pub v: [Vertex; 3],
}

impl TreeReductionLayout {
    pub fn num_vertices(&self) -> usize {
        self.num_vars * (2 * self.stabilizers + 8) + 21 * self.num_clauses + 3
    }

    pub fn num_colors(&self) -> usize {
        2 * self.num_vars + self.num_vars * self.stabilizers + self.num_clauses + 1
    }

    pub fn literal_color(&self, lit: Literal) -> Color {
        (2 * lit.var - usize::from(lit.positive)) as Color
    }

    pub fn stabilizer_color(&self, var: usize, j: usize) -> Color {
        (2 * self.num_vars + (var - 1) * self.stabilizers + j) as Color
    }

    pub fn clause_color(&self, clause: usize) -> Color {
        (2 * self.num_vars + self.num_vars * self.stabilizers + clause) as Color
    }

    pub fn central_color(&self) -> Color {
        self.clause_color(self.num_clauses + 1)
    }
}

#[derive(Debug, Clone)]
pub struct Max2SatTree {
    pub graph: ColoredGraph,
    pub layout: TreeReductionLayout,
    pub metadata: ReductionMetadata,
    /// Set when `N(m) < (n+1)M` fails.
    pub warning: Option<String>,
}

/// `stabilizers = None` uses `n³`.
pub fn max2sat_to_tree(f: &TwoSatFormula, stabilizers: Option<usize>) -> Result<Max2SatTree> {
    let big_m = stabilizers.unwrap_or_else(|| default_stabilizers(f.num_vars));
    if big_m < 1 {
        return Err(Error::InvalidInput("stabilizer count M must be at least 1".into()));
    }
    let (n, m) = (f.num_vars, f.num_clauses());
    let mut next = 0;
    let mut take = |k: usize| {
        let start = next;
        next += k;
        start..next
    };
    let mut x = Vec::with_capacity(n);
    let mut xbar = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    let mut sbar = Vec::with_capacity(n);
    for _ in 0..n {
        x.push(array(take(4)));
        xbar.push(array(take(4)));
        s.push(take(big_m).collect());
        sbar.push(take(big_m).collect());
    }
    let mut y = Vec::with_capacity(m);
    let mut z = Vec::with_capacity(m);
    let mut w = Vec::with_capacity(m);
    for _ in 0..m {
        y.push(array(take(7)));
        z.push(array(take(7)));
        w.push(array(take(7)));
    }
    let v = array(take(3));
    let layout = TreeReductionLayout { num_vars: n, num_clauses: m, stabilizers: big_m, x, xbar, s, sbar, y, z, w, v };
    let total = layout.num_vertices();
    debug_assert_eq!(next, total);

    let mut colors = vec![0 as Color; total];
    let mut edges = Vec::with_capacity(total - 1);
    let path = |p: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>| edges.extend(p.windows(2).map(|e| (e[0], e[1])));
    for i in 0..n {
        let var = i + 1;
        let (pos, neg) = (Literal { var, positive: true }, Literal { var, positive: false });
        for &u in &layout.x[i] {
            colors[u] = layout.literal_color(pos);
        }
        for &u in &layout.xbar[i] {
            colors[u] = layout.literal_color(neg);
        }
        path(&layout.x[i], &mut edges);
        path(&layout.xbar[i], &mut edges);
        for j in 0..big_m {
            let c = layout.stabilizer_color(var, j + 1);
            colors[layout.s[i][j]] = c;
            colors[layout.sbar[i][j]] = c;
            edges.push((layout.s[i][j], layout.x[i][0]));
            edges.push((layout.sbar[i][j], layout.xbar[i][0]));
        }
        edges.push((layout.x[i][0], v[0]));
        edges.push((layout.xbar[i][0], v[0]));
    }
    for (i, &(a, b)) in f.clauses.iter().enumerate() {
        for &u in &layout.y[i] {
            colors[u] = layout.literal_color(a);
        }
        for &u in &layout.z[i] {
            colors[u] = layout.literal_color(b);
        }
        for &u in &layout.w[i] {
            colors[u] = layout.clause_color(i + 1);
        }
        path(&layout.y[i], &mut edges);
        path(&layout.z[i], &mut edges);
        path(&layout.w[i], &mut edges);
        edges.push((layout.y[i][0], layout.w[i][1]));
        edges.push((layout.z[i][0], layout.w[i][5]));
        edges.push((layout.w[i][3], v[0]));
    }
    for &u in &v {
        colors[u] = layout.central_color();
    }
    path(&v, &mut edges);
    let graph = ColoredGraph::new(layout.num_colors(), colors, &edges)?;

    let formula = SizeFormula::TreeGadgets { vars: n as u64, clauses: m as u64, stabilizers: big_m as u64 };
    let mut metadata = ReductionMetadata::new("max2sat-tree", formula).param("n", n).param("m", m).param("M", big_m);
    for i in 0..n {
        for l in 0..4 {
            metadata.role(format!("x_{}_{}", i + 1, l + 1), layout.x[i][l]);
        }
        for l in 0..4 {
            metadata.role(format!("xbar_{}_{}", i + 1, l + 1), layout.xbar[i][l]);
        }
        for j in 0..big_m {
            metadata.role(format!("s_{}_{}", i + 1, j + 1), layout.s[i][j]);
        }
        for j in 0..big_m {
            metadata.role(format!("sbar_{}_{}", i + 1, j + 1), layout.sbar[i][j]);
        }
    }
    for i in 0..m {
        for (name, p) in [("y", &layout.y[i]), ("z", &layout.z[i]), ("w", &layout.w[i])] {
            for (l, &u) in p.iter().enumerate() {
                metadata.role(format!("{name}_{}_{}", i + 1, l + 1), u);
            }
        }
    }
    for (l, &u) in v.iter().enumerate() {
        metadata.role(format!("v_{}", l + 1), u);
    }

    let warning = (!stabilizers_sufficient(n, m, big_m)).then(|| {
        format!(
            "M={big_m} violates N(m) < (n+1)M ({} >= {}); the instance only supports the forward direction",
            target_size(n, m, big_m, m),
            (n + 1) * big_m
        )
    });
    Ok(Max2SatTree { graph, layout, metadata, warning })
}

fn array<const N: usize>(r: std::ops::Range<usize>) -> [Vertex; N] {
    let v: Vec<Vertex> = r.collect();
    v.try_into().expect("range length matches")
}

/// The subset built from a truth assignment; its size is `N(k)` for `k`
/// satisfied clauses.
pub fn assignment_certificate(
    layout: &TreeReductionLayout,
    f: &TwoSatFormula,
    assignment: &[bool],
) -> Result<Certificate> {
    if assignment.len() != f.num_vars || layout.num_vars != f.num_vars || layout.num_clauses != f.num_clauses() {
        return Err(Error::InvalidInput("assignment does not match the formula".into()));
    }
    let mut witness = Vec::with_capacity(target_size(f.num_vars, f.num_clauses(), layout.stabilizers, 0));
    for (i, &value) in assignment.iter().enumerate() {
        if value {
            witness.extend(&layout.s[i]);
            witness.extend([layout.x[i][1], layout.xbar[i][3]]);
        } else {
            witness.extend(&layout.sbar[i]);
            witness.extend([layout.x[i][3], layout.xbar[i][1]]);
        }
    }
    for (i, (a, b)) in f.clauses.iter().enumerate() {
        if a.eval(assignment) {
            witness.extend([layout.w[i][6], layout.z[i][0]]);
        } else if b.eval(assignment) {
            witness.extend([layout.w[i][0], layout.y[i][0]]);
        } else {
            witness.extend([layout.w[i][0], layout.y[i][0], layout.z[i][6]]);
        }
    }
    witness.push(layout.v[2]);
    Certificate::new(Variant::Mcs, witness, Provenance::Constructed)
}
