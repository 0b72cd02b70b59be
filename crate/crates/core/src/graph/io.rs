use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Content lines with their 1-based line numbers; `#` comments and blank
/// lines are skipped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_error(line, format!("missing {what}")))?;
        tok.parse().map_err(|_| parse_error(line, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(parse_error(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v` with
/// 0-based vertices. Edge ids follow file order.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_error(1, "missing header"))?;
    let (n, m) = parse_pair(hline, header).map_err(|e| match e {
        Error::Parse { line, message } => parse_error(line, format!("malformed header: {message}")),
        other => other,
    })?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, content) in lines {
        if edges.len() == m {
            return Err(parse_error(line, format!("more than {m} edge lines")));
        }
        let (a, b) = parse_pair(line, content)?;
        if a >= n || b >= n {
            return Err(parse_error(line, format!("vertex index out of range (n = {n})")));
        }
        if a == b {
            return Err(parse_error(line, format!("loop at vertex {a}")));
        }
        edges.push((a, b));
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_error(last_line, format!("expected {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_small_graphs() {
        let p2 = parse_graph("2 1\n0 1").unwrap();
        assert_eq!((p2.vertex_count(), p2.edge_count()), (2, 1));
        let tri = parse_graph("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(tri.edges(), &[(0, 1), (1, 2), (0, 2)]);
        let k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# a path\n3 2\n\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn errors_name_the_line() {
        assert!(matches!(parse_graph("x 1\n0 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("2 1\n0 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n\n1 1"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 1\n0 1\n1 2"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }
}
