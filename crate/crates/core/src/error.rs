use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// What went wrong on a particular line of a text instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    DuplicateHeader,
    MalformedHeader,
    MalformedLine,
    InvalidNumber(String),
    VertexOutOfRange(u64),
    ColorOutOfRange(u64),
    DuplicateColor(u64),
    MissingColor(u64),
    SelfLoop(u64),
    DuplicateEdge(u64, u64),
    CountMismatch { what: &'static str, declared: usize, found: usize },
    UnknownLineType(String),
    NotIncreasing,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            MissingHeader => write!(f, "missing header line"),
            DuplicateHeader => write!(f, "more than one header line"),
            MalformedHeader => write!(f, "malformed header"),
            MalformedLine => write!(f, "malformed line"),
            InvalidNumber(tok) => write!(f, "invalid number `{tok}`"),
            VertexOutOfRange(v) => write!(f, "vertex id {v} out of range"),
            ColorOutOfRange(c) => write!(f, "color id {c} out of range"),
            DuplicateColor(v) => write!(f, "vertex {v} colored twice"),
            MissingColor(v) => write!(f, "no color line for vertex {v}"),
            SelfLoop(v) => write!(f, "self-loop on vertex {v}"),
            DuplicateEdge(u, w) => write!(f, "duplicate edge {u}-{w}"),
            CountMismatch { what, declared, found } => {
                write!(f, "header declares {declared} {what} but {found} found")
            }
            UnknownLineType(tag) => write!(f, "unknown line type `{tag}`"),
            NotIncreasing => write!(f, "ids must be strictly increasing"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("color {color} of vertex {vertex} outside 1..={num_colors}")]
    ColorOutOfRange { vertex: usize, color: u32, num_colors: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("{n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("{colors} colors exceed the color-set width of {max}")]
    TooManyColors { colors: usize, max: usize },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("{0}")]
    InvalidInput(String),
}
