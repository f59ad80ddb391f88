//! Exact isomorphism testing by refinement-guided backtracking.

use crate::graph::Graph;
use crate::search::find_isomorphism;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    find_isomorphism(g, &vec![0; g.order()], h, &vec![0; h.order()]).is_some()
}

/// Isomorphism of rooted graphs: the root must map to the root.
pub fn is_rooted_isomorphic(g: &Graph, root_g: usize, h: &Graph, root_h: usize) -> bool {
    if g.order() != h.order() || root_g >= g.order() || root_h >= h.order() {
        return false;
    }
    let mut lg = vec![0; g.order()];
    let mut lh = vec![0; h.order()];
    lg[root_g] = 1;
    lh[root_h] = 1;
    find_isomorphism(g, &lg, h, &lh).is_some()
}
