//! Every connected graph on up to seven vertices, one per isomorphism class,
//! stored as graph6 under `data/` (see `examples/gen_fixtures.rs`).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::graph6;

const DATA: [&str; 7] = [
    include_str!("../data/connected_n1.g6"),
    include_str!("../data/connected_n2.g6"),
    include_str!("../data/connected_n3.g6"),
    include_str!("../data/connected_n4.g6"),
    include_str!("../data/connected_n5.g6"),
    include_str!("../data/connected_n6.g6"),
    include_str!("../data/connected_n7.g6"),
];

pub const MAX_ORDER: usize = DATA.len();

/// Connected graphs on exactly `n` vertices.
pub fn connected(n: usize) -> Result<Vec<Graph>> {
    match n {
        1..=MAX_ORDER => Ok(graph6::decode_all(DATA[n - 1])?),
        _ => Err(Error::Precondition(format!("fixtures cover 1 ≤ n ≤ {MAX_ORDER}, not {n}"))),
    }
}

/// Connected graphs on `lo..=hi` vertices, smallest first.
pub fn connected_range(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(connected(n)?);
    }
    Ok(out)
}
