//! The graph6 text encoding of undirected graphs.
//!
//! A size prefix is followed by the upper triangle of the adjacency matrix in
//! column order, six bits per printable byte.

use thiserror::Error;

use crate::config::HARD_VERTEX_LIMIT;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("graph6: expected {expected} data bytes for n = {n}, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("graph6: padding bits in the final byte are not zero")]
    NonZeroPadding,
    #[error("graph6: n = {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::BadByte { byte, offset });
    }
    Ok(u32::from(byte - 63))
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let take = |from: usize, count: usize| -> Result<usize, Graph6Error> {
        if bytes.len() < from + count {
            return Err(Graph6Error::WrongLength { n: 0, expected: from + count, found: bytes.len() });
        }
        (from..from + count).try_fold(0usize, |acc, i| Ok((acc << 6) | sextet(bytes, i)? as usize))
    };
    if bytes.len() > 1 && bytes[1] == 126 {
        Ok((take(2, 6)?, 8))
    } else {
        Ok((take(1, 3)?, 4))
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, start) = read_size(bytes)?;
    if n > HARD_VERTEX_LIMIT {
        return Err(Graph6Error::TooLarge { n, max: HARD_VERTEX_LIMIT });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: data.len() });
    }
    let mut adj = vec![0u64; n];
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let s = sextet(bytes, start + idx / 6)?;
            if s >> (5 - idx % 6) & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            idx += 1;
        }
    }
    if idx % 6 != 0 {
        let last = sextet(bytes, start + idx / 6)?;
        if last & ((1 << (6 - idx % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Encodes a graph in graph6, without header or newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|i| 63 + ((n >> (6 * i)) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes every non-blank line of a graph6 file.
pub fn decode_all(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode).collect()
}
