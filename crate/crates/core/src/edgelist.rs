//! Human-authored edge-list text: a header line `n m` followed by `m` lines
//! `u v` (0-based). Several graphs may follow each other; blank lines and
//! lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |reason: &str| Error::EdgeList { line: lineno, reason: reason.to_string() };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| err("expected two integers"))?;
    let b = it.next().ok_or_else(|| err("expected two integers"))?;
    if it.next().is_some() {
        return Err(err("trailing tokens"));
    }
    let a = a.parse().map_err(|_| err("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| err("not a non-negative integer"))?;
    Ok((a, b))
}

/// Parses every graph in `text`, in order.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut graphs = Vec::new();
    while let Some((hline, header)) = lines.next() {
        let (n, m) = parse_pair(header, hline)?;
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let (lineno, line) = lines.next().ok_or_else(|| Error::EdgeList {
                line: hline,
                reason: format!("header announces {m} edges, found {k}"),
            })?;
            let (u, v) = parse_pair(line, lineno)?;
            if u >= n || v >= n || u == v {
                return Err(Error::EdgeList {
                    line: lineno,
                    reason: format!("invalid edge {u} {v} for {n} vertices"),
                });
            }
            edges.push((u, v));
        }
        let g = Graph::from_edges(n, edges).map_err(|e| Error::EdgeList {
            line: hline,
            reason: e.to_string(),
        })?;
        if g.m() != m {
            return Err(Error::EdgeList { line: hline, reason: "duplicate edges".into() });
        }
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_stream() {
        let text = "# two graphs\n3 2\n0 1\n1 2\n\n2 0\n";
        let gs = parse_edge_lists(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].m(), 2);
        assert_eq!(gs[1].n(), 2);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_lists("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, Error::EdgeList { line: 3, reason: "not a non-negative integer".into() });
        assert!(matches!(parse_edge_lists("3 1\n0 3\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_lists("3 2\n0 1\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_lists("3 2\n0 1\n1 0\n"), Err(Error::EdgeList { .. })));
    }
}
