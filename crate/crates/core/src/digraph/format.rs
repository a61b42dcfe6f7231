//! Plain-text edge-list format.
//!
//! ```text
//! n m
//! u v      (m lines, 0-based)
//! ```
//!
//! Duplicate edge lines collapse; `u u` is a loop. On output `m` is the number
//! of distinct edges and edges are written in lexicographic order.

use std::fmt;
use std::str::FromStr;

use super::DiGraph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = parts.next().ok_or_else(|| Error::Parse { line: lineno, msg: format!("missing {what}") })?;
        tok.parse()
            .map_err(|_| Error::Parse { line: lineno, msg: format!("{what} {tok:?} is not a non-negative integer") })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if parts.next().is_some() {
        return Err(Error::Parse { line: lineno, msg: "trailing fields".into() });
    }
    Ok((a, b))
}

impl FromStr for DiGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<DiGraph> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let (n, m) = parse_pair(header, hl)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (ln, line) = lines.next().ok_or_else(|| Error::Parse {
                line: hl + edges.len() + 1,
                msg: format!("expected {m} edge lines, found {}", edges.len()),
            })?;
            let (u, v) = parse_pair(line, ln)?;
            if u >= n || v >= n {
                return Err(Error::Parse { line: ln, msg: format!("edge ({u}, {v}) out of range for {n} vertices") });
            }
            edges.push((u, v));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::Parse { line: ln, msg: "unexpected extra line".into() });
        }
        DiGraph::new(n, edges)
    }
}

impl fmt::Display for DiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.edge_count())?;
        for &(u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_collapses() {
        let g: DiGraph = "3 4\n0 1\n1 2\n0 1\n2 2\n".parse().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 2)]);
        assert_eq!(g.to_string(), "3 3\n0 1\n1 2\n2 2\n");
    }

    #[test]
    fn empty_graph_text() {
        let g: DiGraph = "0 0\n".parse().unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.to_string().parse::<DiGraph>().unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "2", "2 1\n0 5\n", "2 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 1 1\n", "1 0\n0 0\n"] {
            assert!(matches!(bad.parse::<DiGraph>(), Err(Error::Parse { .. })), "{bad:?}");
        }
    }
}
