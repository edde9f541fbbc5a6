//! Plain-text edge lists.
//!
//! ```text
//! # comments start with '#'
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The first data line holds the order `n` and the edge count `m`; exactly
//! `m` edge lines follow. Blank lines are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use kegraph_core::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}, expected \"n m\"")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?}, expected \"u v\"")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: more edges than the {expected} declared in the header")]
    TooManyEdges { line: usize, expected: usize },
    #[error("header declares {expected} edges but {found} were given")]
    TooFewEdges { expected: usize, found: usize },
}

fn two_numbers(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = two_numbers(header).ok_or_else(|| ParseError::MalformedHeader {
        line,
        text: header.to_string(),
    })?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(ParseError::TooManyEdges { line, expected: m });
        }
        let (u, v) = two_numbers(text).ok_or_else(|| ParseError::MalformedEdge {
            line,
            text: text.to_string(),
        })?;
        if let Some(vertex) = [u, v].into_iter().find(|&w| w >= n) {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::TooFewEdges {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges).expect("edges validated line by line"))
}

/// Renders `g` with one `# ` line per comment, edges in lexicographic order.
pub fn write(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_path() {
        let g = parse("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse("# hello\n\n2 1\n# edge next\n1 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn diagnostics_name_the_line() {
        assert_eq!(
            parse("2 1\n0 0"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse("# c\n3 2\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge { line: 4, u: 1, v: 0 })
        );
        assert_eq!(
            parse("2 1\n0 5"),
            Err(ParseError::VertexOutOfRange { line: 2, vertex: 5, n: 2 })
        );
        assert!(matches!(
            parse("2 x\n0 1"),
            Err(ParseError::MalformedHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse("2 1\n0 1 2"),
            Err(ParseError::MalformedEdge { line: 2, .. })
        ));
        assert_eq!(
            parse("3 1\n0 1\n1 2"),
            Err(ParseError::TooManyEdges { line: 3, expected: 1 })
        );
        assert_eq!(
            parse("3 2\n0 1"),
            Err(ParseError::TooFewEdges { expected: 2, found: 1 })
        );
        assert_eq!(parse("# only\n"), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse("3 -1\n"),
            Err(ParseError::MalformedHeader { .. })
        ));
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::new(5, [(4, 0), (1, 3), (2, 3)]).unwrap();
        let text = write(&g, &["note".to_string()]);
        assert!(text.starts_with("# note\n5 3\n0 4\n"));
        assert_eq!(parse(&text).unwrap(), g);
    }
}
