//! Text formats for patterns (`pattern <n>` / `edge i j`) and hosts
//! (`pathgraph <n>` / `chord i j`). `#` starts a comment; blank lines are ignored.

use crate::graph::{OrderedGraph, PathGraph};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("input is not valid UTF-8")]
    Encoding,
    #[error("missing `{0} <n>` header")]
    MissingHeader(&'static str),
    #[error("malformed header, expected `{0} <n>`")]
    BadHeader(&'static str),
    #[error("malformed entry, expected `{0} <i> <j>`")]
    BadEntry(&'static str),
    #[error("vertex {0} out of range for n = {1}")]
    OutOfRange(usize, usize),
    #[error("duplicate pair ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("pair ({0}, {1}) must satisfy i < j")]
    NotAscending(usize, usize),
    #[error("chord ({0}, {1}) has span < 2")]
    ShortChord(usize, usize),
    #[error("a path graph needs at least one vertex")]
    NoVertices,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &[u8]) -> Result<Vec<(usize, &str)>, ParseError> {
    let text = std::str::from_utf8(text).map_err(|_| err(0, ParseErrorKind::Encoding))?;
    Ok(text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        })
        .collect())
}

fn parse_pairs(
    text: &[u8],
    header: &'static str,
    entry: &'static str,
    min_span: usize,
) -> Result<(usize, Vec<(usize, usize)>), ParseError> {
    let lines = content_lines(text)?;
    let Some(&(hline, head)) = lines.first() else {
        return Err(err(1, ParseErrorKind::MissingHeader(header)));
    };
    let n = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        [h, n] if *h == header => n.parse::<usize>().map_err(|_| err(hline, ParseErrorKind::BadHeader(header)))?,
        [h, ..] if *h == entry => return Err(err(hline, ParseErrorKind::MissingHeader(header))),
        _ => return Err(err(hline, ParseErrorKind::BadHeader(header))),
    };
    if min_span >= 2 && n == 0 {
        return Err(err(hline, ParseErrorKind::NoVertices));
    }
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::new();
    for &(line, body) in &lines[1..] {
        let toks: Vec<_> = body.split_whitespace().collect();
        let [kw, i, j] = toks.as_slice() else {
            return Err(err(line, ParseErrorKind::BadEntry(entry)));
        };
        if *kw != entry {
            return Err(err(line, ParseErrorKind::BadEntry(entry)));
        }
        let bad = || err(line, ParseErrorKind::BadEntry(entry));
        let i: usize = i.parse().map_err(|_| bad())?;
        let j: usize = j.parse().map_err(|_| bad())?;
        if i >= n || j >= n {
            return Err(err(line, ParseErrorKind::OutOfRange(i.max(j), n)));
        }
        if i >= j {
            return Err(err(line, ParseErrorKind::NotAscending(i, j)));
        }
        if j - i < min_span {
            return Err(err(line, ParseErrorKind::ShortChord(i, j)));
        }
        if !seen.insert((i, j)) {
            return Err(err(line, ParseErrorKind::Duplicate(i, j)));
        }
        pairs.push((i, j));
    }
    Ok((n, pairs))
}

pub fn parse_ordered_graph(text: &[u8]) -> Result<OrderedGraph, ParseError> {
    let (n, pairs) = parse_pairs(text, "pattern", "edge", 1)?;
    Ok(OrderedGraph::new(n, pairs).expect("pairs validated while parsing"))
}

pub fn parse_path_graph(text: &[u8]) -> Result<PathGraph, ParseError> {
    let (n, pairs) = parse_pairs(text, "pathgraph", "chord", 2)?;
    Ok(PathGraph::new(n, pairs).expect("chords validated while parsing"))
}

/// Canonical text: header then edges in lexicographic order.
pub fn serialize_ordered_graph(h: &OrderedGraph) -> String {
    let mut s = format!("pattern {}\n", h.n());
    for &(i, j) in h.edges() {
        writeln!(s, "edge {i} {j}").unwrap();
    }
    s
}

pub fn serialize_path_graph(g: &PathGraph) -> String {
    let mut s = format!("pathgraph {}\n", g.n());
    for &(i, j) in g.chords() {
        writeln!(s, "chord {i} {j}").unwrap();
    }
    s
}
