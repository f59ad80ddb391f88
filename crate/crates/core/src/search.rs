//! Label refinement and backtracking search over label-preserving vertex maps.
//!
//! Every automorphism search in the crate runs through here: plain
//! automorphism groups (all labels equal), root stabilizers (root labeled
//! apart) and color-preserving automorphisms (labels = colors).

use std::ops::ControlFlow;

use crate::graph::{bit, members, Graph, VertexSet};

/// Equitable refinement of the given labelings, computed jointly so the
/// resulting labels are comparable across graphs. Output labels are dense
/// ranks `0..classes`, ordered canonically by signature.
pub(crate) fn refine_joint(graphs: &[&Graph], initial: &[&[u32]]) -> Vec<Vec<u32>> {
    debug_assert_eq!(graphs.len(), initial.len());
    let total: usize = graphs.iter().map(|g| g.order()).sum();
    let mut labels: Vec<Vec<u32>> = initial.iter().map(|l| l.to_vec()).collect();

    // Normalize to dense ranks.
    let mut distinct: Vec<u32> = labels.iter().flatten().copied().collect();
    distinct.sort_unstable();
    distinct.dedup();
    for l in labels.iter_mut() {
        for x in l.iter_mut() {
            *x = distinct.binary_search(x).unwrap() as u32;
        }
    }
    let mut classes = distinct.len();

    loop {
        let width = classes + 1;
        let mut sig = vec![0u16; total * width];
        let mut row = 0;
        for (g, l) in graphs.iter().zip(&labels) {
            let mut masks = vec![0u64; classes];
            for (v, &c) in l.iter().enumerate() {
                masks[c as usize] |= bit(v);
            }
            for v in 0..g.order() {
                let r = &mut sig[row * width..(row + 1) * width];
                r[0] = l[v] as u16;
                let nb = g.neighbor_set(v);
                for (c, m) in masks.iter().enumerate() {
                    r[c + 1] = (nb & m).count_ones() as u16;
                }
                row += 1;
            }
        }
        let mut idx: Vec<usize> = (0..total).collect();
        idx.sort_unstable_by(|&a, &b| sig[a * width..(a + 1) * width].cmp(&sig[b * width..(b + 1) * width]));
        let mut rank = vec![0u32; total];
        let mut next = 0u32;
        for (pos, &r) in idx.iter().enumerate() {
            if pos > 0 && sig[r * width..(r + 1) * width] != sig[idx[pos - 1] * width..(idx[pos - 1] + 1) * width] {
                next += 1;
            }
            rank[r] = next;
        }
        let new_classes = if total == 0 { 0 } else { next as usize + 1 };
        let mut row = 0;
        for l in labels.iter_mut() {
            for x in l.iter_mut() {
                *x = rank[row];
                row += 1;
            }
        }
        if new_classes == classes {
            return labels;
        }
        classes = new_classes;
    }
}

pub(crate) fn refine(g: &Graph, initial: &[u32]) -> Vec<u32> {
    refine_joint(&[g], &[initial]).pop().unwrap()
}

/// Backtracking search for label-preserving automorphisms of one graph.
pub(crate) struct AutSearch<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    /// For each vertex, the vertices sharing its refined label.
    cell: Vec<VertexSet>,
    discrete: bool,
}

impl<'g> AutSearch<'g> {
    pub(crate) fn new(g: &'g Graph, labels: &[u32]) -> AutSearch<'g> {
        let refined = refine(g, labels);
        let n = g.order();
        let classes = refined.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut masks = vec![0u64; classes];
        for (v, &c) in refined.iter().enumerate() {
            masks[c as usize] |= bit(v);
        }
        let cell: Vec<VertexSet> = refined.iter().map(|&c| masks[c as usize]).collect();
        AutSearch { g, order: g.bfs_order(0..n.min(1)), cell, discrete: classes == n }
    }

    /// Calls `f` with the image array of every label-preserving automorphism,
    /// identity first.
    pub(crate) fn visit<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        let n = self.g.order();
        let mut img = vec![0u8; n];
        if self.discrete {
            for (v, x) in img.iter_mut().enumerate() {
                *x = v as u8;
            }
            return f(&img);
        }
        self.dfs(0, &mut img, 0, &mut f)
    }

    fn dfs<F>(&self, i: usize, img: &mut [u8], used: VertexSet, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        if i == self.order.len() {
            return f(img);
        }
        let v = self.order[i];
        let nb = self.g.neighbor_set(v);
        let mut cand = self.cell[v] & !used;
        for &u in &self.order[..i] {
            let w = img[u] as usize;
            if nb & bit(u) != 0 {
                cand &= self.g.neighbor_set(w);
            } else {
                cand &= !self.g.neighbor_set(w);
            }
            if cand == 0 {
                return ControlFlow::Continue(());
            }
        }
        if cand & bit(v) != 0 {
            img[v] = v as u8;
            self.dfs(i + 1, img, used | bit(v), f)?;
        }
        for w in members(cand & !bit(v)) {
            img[v] = w as u8;
            self.dfs(i + 1, img, used | bit(w), f)?;
        }
        ControlFlow::Continue(())
    }

    /// Whether some non-identity automorphism preserves the labels.
    pub(crate) fn has_nontrivial(&self) -> bool {
        if self.discrete {
            return false;
        }
        self.visit(|img| {
            if img.iter().enumerate().all(|(v, &w)| v == w as usize) {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(())
            }
        })
        .is_break()
    }
}

/// Searches for an isomorphism `g -> h` that carries `lg` onto `lh`.
pub(crate) fn find_isomorphism(g: &Graph, lg: &[u32], h: &Graph, lh: &[u32]) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let refined = refine_joint(&[g, h], &[lg, lh]);
    let (rg, rh) = (&refined[0], &refined[1]);
    let mut sg = rg.clone();
    let mut sh = rh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    let classes = rg.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut hmask = vec![0u64; classes];
    for (v, &c) in rh.iter().enumerate() {
        hmask[c as usize] |= bit(v);
    }
    let order = g.bfs_order(0..n.min(1));
    let mut img = vec![usize::MAX; n];

    fn dfs(
        i: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        rg: &[u32],
        hmask: &[u64],
        img: &mut [usize],
        used: VertexSet,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let nb = g.neighbor_set(v);
        let mut cand = hmask[rg[v] as usize] & !used;
        for &u in &order[..i] {
            let w = img[u];
            if nb & bit(u) != 0 {
                cand &= h.neighbor_set(w);
            } else {
                cand &= !h.neighbor_set(w);
            }
        }
        for w in members(cand) {
            img[v] = w;
            if dfs(i + 1, order, g, h, rg, hmask, img, used | bit(w)) {
                return true;
            }
        }
        false
    }

    if dfs(0, &order, g, h, rg, &hmask, &mut img, 0) {
        Some(img)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &Graph, labels: &[u32]) -> usize {
        let mut c = 0;
        let _ = AutSearch::new(g, labels).visit(|_| {
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    #[test]
    fn refinement_separates_path_ends_from_middle() {
        let p = Graph::path(5).unwrap();
        let r = refine(&p, &[0; 5]);
        assert_eq!(r[0], r[4]);
        assert_eq!(r[1], r[3]);
        assert_ne!(r[0], r[1]);
        assert_ne!(r[1], r[2]);
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(count(&Graph::complete(4).unwrap(), &[0; 4]), 24);
        assert_eq!(count(&Graph::cycle(6).unwrap(), &[0; 6]), 12);
        assert_eq!(count(&Graph::path(4).unwrap(), &[0; 4]), 2);
        assert_eq!(count(&Graph::path(4).unwrap(), &[1, 0, 0, 0]), 1);
        assert_eq!(count(&Graph::empty(3).unwrap(), &[0; 3]), 6);
    }

    #[test]
    fn colored_nontriviality() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(!AutSearch::new(&c5, &[0, 1, 2, 0, 0]).has_nontrivial());
        // Every two-coloring of C5 keeps a reflection.
        assert!(AutSearch::new(&c5, &[0, 0, 1, 0, 1]).has_nontrivial());
        assert!(AutSearch::new(&c5, &[0, 0, 0, 0, 1]).has_nontrivial());
    }

    #[test]
    fn isomorphism_map_is_valid() {
        let c4 = Graph::cycle(4).unwrap();
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        let m = find_isomorphism(&c4, &[0; 4], &k22, &[0; 4]).unwrap();
        for (u, v) in c4.edges() {
            assert!(k22.has_edge(m[u], m[v]));
        }
    }
}
