//! Short textual names for graphs, used on the command line and in
//! verification grids.
//!
//! | token         | graph                                   |
//! |---------------|-----------------------------------------|
//! | `K5`          | complete graph                          |
//! | `C6`, `P4`    | cycle, path                             |
//! | `S3`          | star with three leaves, center 0        |
//! | `E3`          | edgeless graph                          |
//! | `K3x3`        | complete bipartite graph                |
//! | `KG5_2`       | Kneser graph                            |
//! | `K4-e`        | complete graph minus the edge (0,1)     |
//! | `petersen`    | Petersen graph                          |
//! | `paw`         | triangle 1-2-3 with pendant 0 on 1      |
//! | `asym6`       | smallest asymmetric graphs, 6 vertices  |
//! | `asym7`       | smallest asymmetric tree                |
//! | `g6:<code>`   | any graph in graph6                     |
//!
//! A rooted graph appends `@v`, e.g. `K4-e@0`; the default root is 0.

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph};
use crate::io::graph6;

fn bad(token: &str, reason: impl Into<String>) -> Error {
    Error::InvalidFamily { family: "graph name", reason: format!("{token:?}: {}", reason.into()) }
}

fn number(token: &str, s: &str) -> Result<usize> {
    s.parse().map_err(|_| bad(token, format!("expected a number, found {s:?}")))
}

pub fn parse_graph(token: &str) -> Result<Graph> {
    let t = token.trim();
    if let Some(code) = t.strip_prefix("g6:") {
        return Ok(graph6::decode(code)?);
    }
    match t.to_ascii_lowercase().as_str() {
        "petersen" => return Ok(Graph::petersen()),
        "paw" => return Graph::new(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]),
        "asym6" => return Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]),
        "asym7" => return Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix("KG") {
        let (a, b) = rest.split_once('_').ok_or_else(|| bad(t, "Kneser graphs are written KGn_k"))?;
        return Graph::kneser(number(t, a)?, number(t, b)?);
    }
    if let Some(rest) = t.strip_suffix("-e") {
        let n = number(t, rest.strip_prefix('K').ok_or_else(|| bad(t, "only K<n>-e is supported"))?)?;
        if n < 2 {
            return Err(bad(t, "K<n>-e needs n ≥ 2"));
        }
        let k = Graph::complete(n)?;
        let edges: Vec<(usize, usize)> = k.edges().filter(|&e| e != (0, 1)).collect();
        return Graph::new(n, &edges);
    }
    let mut chars = t.chars();
    let head = chars.next().ok_or_else(|| bad(t, "empty name"))?;
    let rest = chars.as_str();
    match head {
        'K' => match rest.split_once('x') {
            Some((a, b)) => Graph::complete_bipartite(number(t, a)?, number(t, b)?),
            None => Graph::complete(number(t, rest)?),
        },
        'C' => Graph::cycle(number(t, rest)?),
        'P' => Graph::path(number(t, rest)?),
        'S' => Graph::star(number(t, rest)?),
        'E' => Graph::empty(number(t, rest)?),
        _ => Err(bad(t, "unknown graph name")),
    }
}

pub fn parse_rooted(token: &str) -> Result<RootedGraph> {
    // Digits never occur in graph6 data, so a numeric suffix is unambiguous.
    let (name, root) = match token.rsplit_once('@') {
        Some((name, r)) if !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()) => (name, number(token, r)?),
        _ => (token, 0),
    };
    RootedGraph::new(parse_graph(name)?, root)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        assert_eq!(parse_graph("K3").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(parse_graph("K3x3").unwrap(), Graph::complete_bipartite(3, 3).unwrap());
        assert_eq!(parse_graph("KG5_2").unwrap().edge_count(), 15);
        assert_eq!(parse_graph("K4-e").unwrap().edge_count(), 5);
        assert_eq!(parse_graph("K4-e").unwrap().degree(0), 2);
        assert_eq!(parse_graph("S3").unwrap(), Graph::star(3).unwrap());
        assert_eq!(parse_graph("E2").unwrap().edge_count(), 0);
        assert_eq!(parse_graph("g6:A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph("paw").unwrap().edge_count(), 4);
        assert!(parse_graph("Q3").is_err());
        assert!(parse_graph("Kx").is_err());
        assert!(parse_graph("g6:A!").is_err());
        let r = parse_rooted("P3@1").unwrap();
        assert_eq!(r.root(), 1);
        assert_eq!(parse_rooted("C4").unwrap().root(), 0);
        assert!(parse_rooted("P3@3").is_err());
        assert_eq!(parse_rooted("g6:@").unwrap().graph().order(), 1);
        assert_eq!(parse_rooted("g6:Bw@2").unwrap().root(), 2);
    }
}
