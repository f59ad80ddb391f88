//! Vertex colorings and the exhaustive enumerators over them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Assignment of colors `1..=palette` to the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, palette: u32) -> Result<Coloring> {
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return Err(Error::Precondition(format!("color {bad} outside palette 1..={palette}")));
        }
        Ok(Coloring { colors, palette })
    }

    /// Palette taken as the largest color used.
    pub fn from_colors(colors: Vec<u32>) -> Result<Coloring> {
        let palette = colors.iter().copied().max().unwrap_or(1);
        Coloring::new(colors, palette)
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Restricted growth strings of a given length: every set partition of
/// `0..n` exactly once, block ids in order of first appearance.
pub(crate) struct PartitionPrefix {
    pub(crate) blocks: Vec<u8>,
    pub(crate) used: usize,
}

/// All prefixes of length `depth` with at most `max_blocks` blocks that can
/// still be completed to a partition with at least `min_blocks` blocks.
pub(crate) fn partition_prefixes(n: usize, depth: usize, min_blocks: usize, max_blocks: usize) -> Vec<PartitionPrefix> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(depth);
    fn rec(n: usize, depth: usize, lo: usize, hi: usize, used: usize, buf: &mut Vec<u8>, out: &mut Vec<PartitionPrefix>) {
        let pos = buf.len();
        if used + (n - pos) < lo {
            return;
        }
        if pos == depth {
            out.push(PartitionPrefix { blocks: buf.clone(), used });
            return;
        }
        for b in 0..=used.min(hi.saturating_sub(1)) {
            buf.push(b as u8);
            rec(n, depth, lo, hi, used.max(b + 1), buf, out);
            buf.pop();
        }
    }
    rec(n, depth.min(n), min_blocks, max_blocks, 0, &mut buf, &mut out);
    out
}

/// Completes `prefix` to every partition of `0..n` whose block count lies in
/// `min_blocks..=max_blocks`, calling `f(blocks, count)`; stops when `f`
/// returns true and reports whether it did.
pub(crate) fn complete_partitions<F>(n: usize, prefix: &PartitionPrefix, min_blocks: usize, max_blocks: usize, f: &mut F) -> bool
where
    F: FnMut(&[u8], usize) -> bool,
{
    let mut buf = vec![0u8; n];
    buf[..prefix.blocks.len()].copy_from_slice(&prefix.blocks);
    fn rec<F: FnMut(&[u8], usize) -> bool>(pos: usize, used: usize, lo: usize, hi: usize, buf: &mut [u8], f: &mut F) -> bool {
        let n = buf.len();
        if used + (n - pos) < lo {
            return false;
        }
        if pos == n {
            return f(buf, used);
        }
        for b in 0..=used.min(hi - 1) {
            buf[pos] = b as u8;
            if rec(pos + 1, used.max(b + 1), lo, hi, buf, f) {
                return true;
            }
        }
        false
    }
    if n == 0 {
        return f(&buf, 0);
    }
    rec(prefix.blocks.len(), prefix.used, min_blocks, max_blocks.max(1), &mut buf, f)
}

/// Every prefix of length `depth` over the palette `0..k`.
pub(crate) fn coloring_prefixes(k: usize, depth: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..depth {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..k as u8).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Odometer over all completions of `prefix` to a full `k`-coloring.
pub(crate) fn complete_colorings<F>(n: usize, k: usize, prefix: &[u8], f: &mut F)
where
    F: FnMut(&[u8]),
{
    let mut buf = vec![0u8; n];
    buf[..prefix.len()].copy_from_slice(prefix);
    let start = prefix.len();
    loop {
        f(&buf);
        let mut i = n;
        loop {
            if i == start {
                return;
            }
            i -= 1;
            if (buf[i] as usize) + 1 < k {
                buf[i] += 1;
                break;
            }
            buf[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::stirling2;

    #[test]
    fn coloring_validation() {
        assert!(Coloring::new(vec![1, 2, 3], 3).is_ok());
        assert!(Coloring::new(vec![0, 1], 3).is_err());
        assert!(Coloring::new(vec![4], 3).is_err());
        assert_eq!(Coloring::from_colors(vec![1, 1, 2]).unwrap().distinct_colors(), 2);
    }

    #[test]
    fn partition_enumeration_matches_stirling() {
        for n in 1..=8 {
            for depth in [0, 1, 3, n] {
                for k in 1..=n {
                    let mut count = 0u64;
                    for p in partition_prefixes(n, depth, k, k) {
                        complete_partitions(n, &p, k, k, &mut |b, used| {
                            assert_eq!(used, k);
                            assert_eq!(b[0], 0);
                            count += 1;
                            false
                        });
                    }
                    assert_eq!(count, stirling2(n as u64, k as u64).unwrap(), "n={n} depth={depth} k={k}");
                }
            }
        }
    }

    #[test]
    fn odometer_visits_every_coloring_once() {
        let mut seen = std::collections::HashSet::new();
        for p in coloring_prefixes(3, 2) {
            complete_colorings(4, 3, &p, &mut |c| {
                assert!(seen.insert(c.to_vec()));
            });
        }
        assert_eq!(seen.len(), 81);
        let mut count = 0;
        complete_colorings(3, 1, &[], &mut |_| count += 1);
        assert_eq!(count, 1);
    }
}
