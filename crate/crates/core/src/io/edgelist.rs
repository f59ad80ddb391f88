//! Plain edge-list files: a header line `n m`, then `m` lines `u v` with
//! 0-indexed endpoints. Blank lines and `#` comments are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn bad(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList { line, reason: reason.into() }
}

fn pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(bad(line, format!("expected two integers, got {text:?}")));
    };
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad(line, format!("not a non-negative integer: {s:?}")));
    Ok((num(a)?, num(b)?))
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(bad(1, "missing header line \"n m\""));
    };
    let (n, m) = pair(hline, header)?;
    let mut g = Graph::empty(n).map_err(|e| bad(hline, e.to_string()))?;
    let mut seen = 0;
    for (line, text) in lines {
        let (u, v) = pair(line, text)?;
        g.insert_edge(u, v).map_err(|e| bad(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(bad(hline, format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse(&write(&g)).unwrap(), g);
        let g = parse("# triangle\n3 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn line_numbers_in_errors() {
        let err = parse("3 2\n0 1\n1 7\n").unwrap_err();
        assert!(matches!(err, Error::EdgeList { line: 3, .. }), "{err}");
        assert!(matches!(parse("3 2\n0 0\n1 2\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse("3 1\nx 1\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse(""), Err(Error::EdgeList { line: 1, .. })));
    }
}
