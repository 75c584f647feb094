//! Line-oriented text formats for colored graphs (`p ccg`) and subsets.
//!
//! ```text
//! c optional comment
//! p ccg <n> <m> <colors>
//! v <id> <color>      (exactly n lines, ids 1..=n)
//! e <u> <w>           (exactly m lines)
//! ```
//!
//! A subset file is a single line `s <id> <id> ...` with strictly
//! increasing ids.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind as K, Result};
use crate::graph::{Color, ColoredGraph, Vertex};

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

pub(crate) fn number(line: usize, tok: &str) -> Result<u64, ParseError> {
    tok.parse::<u64>().map_err(|_| ParseError::new(line, K::InvalidNumber(tok.to_string())))
}

pub fn parse_ccg(text: &str) -> Result<ColoredGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::new(text.lines().count().max(1), K::MissingHeader))?;
    if header[0] != "p" {
        return Err(ParseError::new(hline, K::MissingHeader).into());
    }
    if header.len() != 5 || header[1] != "ccg" {
        return Err(ParseError::new(hline, K::MalformedHeader).into());
    }
    let n = number(hline, header[2])? as usize;
    let m = number(hline, header[3])? as usize;
    let num_colors = number(hline, header[4])? as usize;
    if n == 0 || num_colors == 0 {
        return Err(ParseError::new(hline, K::MalformedHeader).into());
    }

    let mut colors: Vec<Option<Color>> = vec![None; n];
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, toks) in lines {
        last_line = line;
        let vertex = |tok: &str| -> Result<Vertex, ParseError> {
            let id = number(line, tok)?;
            if id == 0 || id as usize > n {
                return Err(ParseError::new(line, K::VertexOutOfRange(id)));
            }
            Ok(id as usize - 1)
        };
        match toks[0] {
            "p" => return Err(ParseError::new(line, K::DuplicateHeader).into()),
            "v" => {
                if toks.len() != 3 {
                    return Err(ParseError::new(line, K::MalformedLine).into());
                }
                let v = vertex(toks[1])?;
                let c = number(line, toks[2])?;
                if c == 0 || c as usize > num_colors {
                    return Err(ParseError::new(line, K::ColorOutOfRange(c)).into());
                }
                if colors[v].replace(c as Color).is_some() {
                    return Err(ParseError::new(line, K::DuplicateColor(v as u64 + 1)).into());
                }
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(ParseError::new(line, K::MalformedLine).into());
                }
                let (u, w) = (vertex(toks[1])?, vertex(toks[2])?);
                if u == w {
                    return Err(ParseError::new(line, K::SelfLoop(u as u64 + 1)).into());
                }
                if !seen.insert((u.min(w), u.max(w))) {
                    return Err(ParseError::new(line, K::DuplicateEdge(u as u64 + 1, w as u64 + 1)).into());
                }
                edges.push((u, w));
            }
            other => return Err(ParseError::new(line, K::UnknownLineType(other.to_string())).into()),
        }
    }
    let eof = text.lines().count().max(last_line);
    if let Some(missing) = colors.iter().position(Option::is_none) {
        return Err(ParseError::new(eof, K::MissingColor(missing as u64 + 1)).into());
    }
    if edges.len() != m {
        return Err(ParseError::new(eof, K::CountMismatch { what: "edges", declared: m, found: edges.len() }).into());
    }
    let colors = colors.into_iter().map(Option::unwrap).collect();
    ColoredGraph::new(num_colors, colors, &edges)
}

pub fn write_ccg(g: &ColoredGraph) -> String {
    write_ccg_with_comments(g, &[])
}

/// Comments go first, one `c` line each. Edges are written with `u < w` in
/// lexicographic order.
pub fn write_ccg_with_comments(g: &ColoredGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p ccg {} {} {}", g.n(), g.num_edges(), g.num_colors());
    for v in 0..g.n() {
        let _ = writeln!(out, "v {} {}", v + 1, g.color(v));
    }
    for (u, w) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, w + 1);
    }
    out
}

/// Parses a subset line into 0-based vertices; `n` bounds the ids.
pub fn parse_subset(text: &str, n: usize) -> Result<Vec<Vertex>> {
    let mut lines = content_lines(text);
    let (line, toks) = lines.next().ok_or(ParseError::new(1, K::MalformedLine))?;
    if toks[0] != "s" {
        return Err(ParseError::new(line, K::UnknownLineType(toks[0].to_string())).into());
    }
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::new(extra, K::MalformedLine).into());
    }
    let mut out: Vec<Vertex> = Vec::with_capacity(toks.len() - 1);
    for tok in &toks[1..] {
        let id = number(line, tok)?;
        if id == 0 || id as usize > n {
            return Err(ParseError::new(line, K::VertexOutOfRange(id)).into());
        }
        let v = id as usize - 1;
        if out.last().is_some_and(|&prev| prev >= v) {
            return Err(ParseError::new(line, K::NotIncreasing).into());
        }
        out.push(v);
    }
    Ok(out)
}

pub fn write_subset(subset: &[Vertex]) -> String {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let mut out = String::from("s");
    for v in sorted {
        let _ = write!(out, " {}", v + 1);
    }
    out.push('\n');
    out
}

/// Comma-separated 1-based ids, as used in CLI reports.
pub fn format_ids(subset: &[Vertex]) -> String {
    subset.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    const RRBB: &str = "p ccg 4 3 2\nv 1 1\nv 2 1\nv 3 2\nv 4 2\ne 1 2\ne 2 3\ne 3 4\n";

    fn parse_err(text: &str) -> ParseError {
        match parse_ccg(text) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn smallest_instance() {
        let g = parse_ccg("p ccg 1 0 1\nv 1 1\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn path_instance_and_comments() {
        let g = parse_ccg(RRBB).unwrap();
        assert_eq!((0..4).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![1, 2, 2, 1]);
        let commented = format!("c hello\nc\n{}c trailing\n", RRBB.replace("v 3 2\n", "v 3 2\nc mid\n"));
        assert_eq!(parse_ccg(&commented).unwrap(), g);
        assert_eq!(write_ccg(&g), RRBB);
    }

    #[test]
    fn each_error_names_its_line() {
        assert_eq!(parse_err("v 1 1\n").kind, K::MissingHeader);
        assert_eq!(parse_err("p ccg 2 0\n").kind, K::MalformedHeader);
        assert_eq!(parse_err("p ccg x 0 1\n").kind, K::InvalidNumber("x".into()));
        let e = parse_err("p ccg 2 0 1\nv 1 1\nv 3 1\n");
        assert_eq!((e.line, e.kind), (3, K::VertexOutOfRange(3)));
        let e = parse_err("p ccg 2 0 1\nv 1 1\n");
        assert_eq!(e.kind, K::MissingColor(2));
        let e = parse_err("p ccg 2 2 1\nv 1 1\nv 2 1\ne 1 2\ne 2 1\n");
        assert_eq!((e.line, e.kind), (5, K::DuplicateEdge(2, 1)));
        let e = parse_err("p ccg 2 1 1\nv 1 1\nv 2 1\ne 2 2\n");
        assert_eq!((e.line, e.kind), (4, K::SelfLoop(2)));
        let e = parse_err("p ccg 2 0 1\nv 1 1\nv 2 2\n");
        assert_eq!((e.line, e.kind), (3, K::ColorOutOfRange(2)));
        let e = parse_err("p ccg 2 0 1\nv 1 1\nv 1 1\n");
        assert_eq!(e.kind, K::DuplicateColor(1));
        let e = parse_err("p ccg 2 1 1\nv 1 1\nv 2 1\n");
        assert!(matches!(e.kind, K::CountMismatch { what: "edges", declared: 1, found: 0 }));
        assert_eq!(parse_err("p ccg 1 0 1\nv 1 1\np ccg 1 0 1\n").kind, K::DuplicateHeader);
        assert_eq!(parse_err("p ccg 1 0 1\nv 1 1\nx 1\n").kind, K::UnknownLineType("x".into()));
    }

    #[test]
    fn subset_lines() {
        assert_eq!(parse_subset("s 1 3 4\n", 4).unwrap(), vec![0, 2, 3]);
        assert_eq!(write_subset(&[3, 0, 2]), "s 1 3 4\n");
        assert!(parse_subset("s 3 1\n", 4).is_err());
        assert!(parse_subset("s 1 1\n", 4).is_err());
        assert!(parse_subset("s 5\n", 4).is_err());
        assert_eq!(format_ids(&[0, 2]), "1,3");
    }
}
