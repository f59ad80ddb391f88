//! A graph together with the automorphism group acting on it: the full group,
//! or the stabilizer of a root. Every coloring count runs against one of these.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::autgroup::{check_vertex_cap, root_labels, visit_automorphisms};
use crate::coloring::{complete_colorings, complete_partitions, coloring_prefixes, partition_prefixes};
use crate::combinatorics::{binomial, checked_pow, factorial, stirling2};
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph};
use crate::par;
use crate::perm::Permutation;
use crate::search::AutSearch;

/// Groups up to this order are checked element by element; larger ones go
/// through the label-preserving automorphism search.
const SCAN_LIMIT: u64 = 48;

/// Depth of the enumeration prefixes handed to worker threads.
const SPLIT_DEPTH: usize = 7;

/// One row of a distinguishing-coloring count table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PhiRow {
    pub k: usize,
    /// Non-equivalent distinguishing colorings with at most `k` colors.
    pub phi: u64,
    /// Non-equivalent distinguishing colorings with exactly `k` colors.
    pub varphi: u64,
}

#[derive(Debug, Clone)]
pub struct SymmetryAction {
    graph: Graph,
    pins: Vec<u32>,
    aut_order: u64,
    max_cycles: Option<usize>,
    scan: Option<Vec<Vec<u8>>>,
    twin_bound: usize,
    /// Bit `w` of entry `v` is set when `w < v` is a twin of `v`.
    earlier_twins: Vec<u64>,
}

impl SymmetryAction {
    /// The full automorphism group of `g`.
    pub fn full(g: &Graph, budget: &Budget) -> Result<SymmetryAction> {
        SymmetryAction::with_pins(g, vec![0; g.order()], budget)
    }

    /// `Aut(H, v)`: automorphisms fixing the root.
    pub fn rooted(h: &RootedGraph, budget: &Budget) -> Result<SymmetryAction> {
        SymmetryAction::with_pins(h.graph(), root_labels(h.graph().order(), h.root()), budget)
    }

    fn with_pins(g: &Graph, pins: Vec<u32>, budget: &Budget) -> Result<SymmetryAction> {
        check_vertex_cap(g, budget)?;
        let mut aut_order = 0u64;
        let mut max_cycles: Option<usize> = None;
        let mut small: Vec<Vec<u8>> = Vec::new();
        let _ = visit_automorphisms(g, &pins, budget, |img| {
            aut_order += 1;
            let p = Permutation::from_raw(img.to_vec());
            if !p.is_identity() {
                let c = p.cycle_count();
                max_cycles = Some(max_cycles.map_or(c, |m| m.max(c)));
                if (small.len() as u64) < SCAN_LIMIT {
                    small.push(img.to_vec());
                }
            }
            ControlFlow::Continue(())
        })?;
        let scan = (aut_order <= SCAN_LIMIT).then_some(small);
        let twin_bound = twin_bound(g, &pins);
        let earlier_twins = earlier_twins(g, &pins);
        Ok(SymmetryAction { graph: g.clone(), pins, aut_order, max_cycles, scan, twin_bound, earlier_twins })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn aut_order(&self) -> u64 {
        self.aut_order
    }

    pub fn is_asymmetric(&self) -> bool {
        self.aut_order == 1
    }

    pub fn max_nonidentity_cycle_count(&self) -> Option<usize> {
        self.max_cycles
    }

    /// Distinguishing threshold from the largest non-identity cycle count.
    pub fn theta(&self) -> usize {
        self.max_cycles.map_or(1, |c| c + 1)
    }

    /// Whether the 0-based coloring is fixed by no non-identity group element.
    pub fn is_distinguishing(&self, colors: &[u8]) -> bool {
        if self.aut_order == 1 {
            return true;
        }
        // Swapping two equally colored twins fixes the coloring.
        for (v, &mask) in self.earlier_twins.iter().enumerate() {
            let mut m = mask;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                if colors[w] == colors[v] {
                    return false;
                }
                m &= m - 1;
            }
        }
        match &self.scan {
            Some(elems) => !elems.iter().any(|p| p.iter().enumerate().all(|(v, &w)| colors[v] == colors[w as usize])),
            None => {
                let labels: Vec<u32> = colors.iter().zip(&self.pins).map(|(&c, &p)| u32::from(c) * 2 + p).collect();
                !AutSearch::new(&self.graph, &labels).has_nontrivial()
            }
        }
    }

    /// Smallest palette admitting a distinguishing coloring.
    pub fn distinguishing_number(&self, budget: &Budget) -> Result<usize> {
        let n = self.graph.order();
        if n == 0 {
            return Err(Error::Precondition("distinguishing number of the empty graph".into()));
        }
        if self.aut_order == 1 {
            return Ok(1);
        }
        let theta = self.theta();
        // Twins must receive pairwise distinct colors.
        for k in self.twin_bound.max(2)..theta {
            if self.exists_distinguishing_partition(k, budget)? {
                return Ok(k);
            }
        }
        // Every coloring with theta colors is distinguishing.
        Ok(theta)
    }

    /// Whether some partition into exactly `k` blocks is distinguishing.
    pub fn exists_distinguishing_partition(&self, k: usize, budget: &Budget) -> Result<bool> {
        let n = self.graph.order();
        if k > n {
            return Ok(false);
        }
        let required = u128::from(stirling2(n as u64, k as u64).unwrap_or(u64::MAX));
        if required > u128::from(budget.max_colorings) {
            return Err(Error::ColoringBudget { required, budget: budget.max_colorings });
        }
        let prefixes = partition_prefixes(n, SPLIT_DEPTH, k, k);
        Ok(par::any(prefixes, budget.parallel, |p| {
            complete_partitions(n, &p, k, k, &mut |blocks, _| self.is_distinguishing(blocks))
        }))
    }

    /// `counts[j]`: distinguishing set partitions with exactly `j` blocks,
    /// for `j <= max_blocks`.
    pub fn partition_counts(&self, max_blocks: usize, budget: &Budget) -> Result<Vec<u64>> {
        let n = self.graph.order();
        let max_blocks = max_blocks.min(n);
        let mut required: u128 = 0;
        for j in 1..=max_blocks {
            required += u128::from(stirling2(n as u64, j as u64).unwrap_or(u64::MAX));
        }
        if required > u128::from(budget.max_colorings) {
            return Err(Error::ColoringBudget { required, budget: budget.max_colorings });
        }
        if max_blocks == 0 {
            return Ok(vec![0]);
        }
        let prefixes = partition_prefixes(n, SPLIT_DEPTH, 1, max_blocks);
        Ok(par::sum_counts(prefixes, max_blocks + 1, budget.parallel, |p| {
            let mut counts = vec![0u64; max_blocks + 1];
            complete_partitions(n, &p, 1, max_blocks, &mut |blocks, used| {
                if self.is_distinguishing(blocks) {
                    counts[used] += 1;
                }
                false
            });
            counts
        }))
    }

    /// Rows `k = 1..=k_max` of (Φ_k, φ_k).
    pub fn phi_rows(&self, k_max: usize, budget: &Budget) -> Result<Vec<PhiRow>> {
        let series = self.phi_series(k_max, budget)?;
        (1..=k_max).map(|k| series.row(k)).collect()
    }

    /// Enumerates the exact-count terms φ_j needed for palettes up to
    /// `k_max`. Pass `usize::MAX` for a series valid at every palette size.
    pub fn phi_series(&self, k_max: usize, budget: &Budget) -> Result<PhiSeries> {
        let n = self.graph.order();
        let below = k_max.min(self.theta().saturating_sub(1)).min(n);
        let counts = self.partition_counts(below, budget)?;
        let mut varphi = vec![0u64; below + 1];
        for j in 1..=below {
            let labeled = factorial(j as u64)?.checked_mul(counts[j]).ok_or(Error::Overflow("coloring count"))?;
            varphi[j] = self.divide_by_group(labeled)?;
        }
        Ok(PhiSeries { n, theta: self.theta(), aut_order: self.aut_order, varphi, limit: k_max })
    }

    /// Distinguishing colorings in `{0..k}^n` by direct enumeration;
    /// `counts[j]` holds those using exactly `j` distinct colors.
    pub fn count_colorings(&self, k: usize, budget: &Budget) -> Result<Vec<u64>> {
        let n = self.graph.order();
        let required = checked_pow(k as u64, n as u64).map(u128::from).unwrap_or(u128::MAX);
        if required > u128::from(budget.max_colorings) {
            return Err(Error::ColoringBudget { required, budget: budget.max_colorings });
        }
        if k == 0 {
            return Ok(vec![u64::from(n == 0)]);
        }
        let mut depth = 0;
        while depth < n && k.pow(depth as u32) < 256 {
            depth += 1;
        }
        let prefixes = coloring_prefixes(k, depth);
        Ok(par::sum_counts(prefixes, k + 1, budget.parallel, |p| {
            let mut counts = vec![0u64; k + 1];
            complete_colorings(n, k, &p, &mut |c| {
                if self.is_distinguishing(c) {
                    let used = c.iter().fold(0u64, |m, &x| m | (1 << x)).count_ones() as usize;
                    counts[used] += 1;
                }
            });
            counts
        }))
    }

    /// Labeled distinguishing colorings fall into orbits of size exactly |Aut|.
    pub fn divide_by_group(&self, labeled: u64) -> Result<u64> {
        if !labeled.is_multiple_of(self.aut_order) {
            return Err(Error::Precondition(format!(
                "{labeled} distinguishing colorings is not a multiple of the group order {}",
                self.aut_order
            )));
        }
        Ok(labeled / self.aut_order)
    }
}

/// φ_j values of one action: enumerated below the threshold, closed form
/// (j!·S(n,j)/|Aut|) from the threshold on.
#[derive(Debug, Clone)]
pub struct PhiSeries {
    n: usize,
    theta: usize,
    aut_order: u64,
    varphi: Vec<u64>,
    limit: usize,
}

impl PhiSeries {
    pub fn varphi(&self, j: usize) -> Result<u64> {
        if j > self.limit {
            return Err(Error::Precondition(format!("φ_{j} lies beyond the enumerated range {}", self.limit)));
        }
        if let Some(&v) = self.varphi.get(j) {
            return Ok(v);
        }
        if j > self.n || j < self.theta {
            return Ok(0);
        }
        let labeled = factorial(j as u64)?
            .checked_mul(stirling2(self.n as u64, j as u64)?)
            .ok_or(Error::Overflow("coloring count"))?;
        Ok(labeled / self.aut_order)
    }

    /// Φ_k = Σ C(k,i)·φ_i.
    pub fn phi(&self, k: usize) -> Result<u64> {
        let mut phi = 0u64;
        for i in 1..=k.min(self.n) {
            let term = binomial(k as u64, i as u64)?.checked_mul(self.varphi(i)?).ok_or(Error::Overflow("phi"))?;
            phi = phi.checked_add(term).ok_or(Error::Overflow("phi"))?;
        }
        Ok(phi)
    }

    pub fn row(&self, k: usize) -> Result<PhiRow> {
        Ok(PhiRow { k, phi: self.phi(k)?, varphi: self.varphi(k)? })
    }

    /// Least `k ≥ 1` with `pred(k, Φ_k)`. The predicate must eventually
    /// hold; the search gives up past `cap`.
    pub fn first_k<F>(&self, cap: usize, mut pred: F) -> Result<usize>
    where
        F: FnMut(usize, u64) -> bool,
    {
        for k in 1..=cap {
            if pred(k, self.phi(k)?) {
                return Ok(k);
            }
        }
        Err(Error::Precondition(format!("no palette size up to {cap} satisfies the criterion")))
    }
}

/// Size of the largest set of pairwise twins sharing a pin label. Swapping
/// two twins is an automorphism, so a distinguishing coloring needs at least
/// this many colors.
fn twin_bound(g: &Graph, pins: &[u32]) -> usize {
    let mut open: HashMap<(u64, u32), usize> = HashMap::new();
    let mut closed: HashMap<(u64, u32), usize> = HashMap::new();
    for v in 0..g.order() {
        let nb = g.neighbor_set(v);
        *open.entry((nb, pins[v])).or_default() += 1;
        *closed.entry((nb | crate::graph::bit(v), pins[v])).or_default() += 1;
    }
    open.values().chain(closed.values()).copied().max().unwrap_or(0)
}

fn earlier_twins(g: &Graph, pins: &[u32]) -> Vec<u64> {
    let bit = crate::graph::bit;
    (0..g.order())
        .map(|v| {
            let nv = g.neighbor_set(v);
            (0..v)
                .filter(|&w| {
                    let nw = g.neighbor_set(w);
                    pins[v] == pins[w] && (nv == nw || nv | bit(v) == nw | bit(w))
                })
                .fold(0, |m, w| m | bit(w))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(g: &Graph) -> SymmetryAction {
        SymmetryAction::full(g, &Budget::default()).unwrap()
    }

    #[test]
    fn scan_and_search_agree() {
        let g = Graph::cycle(6).unwrap();
        let small = full(&g);
        let mut large = small.clone();
        large.scan = None;
        let b = Budget::default();
        for p in coloring_prefixes(3, 6) {
            assert_eq!(small.is_distinguishing(&p), large.is_distinguishing(&p), "{p:?}");
        }
        assert_eq!(small.distinguishing_number(&b).unwrap(), large.distinguishing_number(&b).unwrap());
    }

    #[test]
    fn twin_bounds() {
        let b = |g: &Graph| twin_bound(g, &vec![0; g.order()]);
        assert_eq!(b(&Graph::complete(5).unwrap()), 5);
        assert_eq!(b(&Graph::star(4).unwrap()), 4);
        assert_eq!(b(&Graph::complete_bipartite(3, 3).unwrap()), 3);
        assert_eq!(b(&Graph::cycle(6).unwrap()), 1);
    }

    #[test]
    fn direct_and_partition_counts_agree() {
        let b = Budget::default();
        for g in [Graph::path(5).unwrap(), Graph::cycle(5).unwrap(), Graph::star(3).unwrap()] {
            let a = full(&g);
            let parts = a.partition_counts(4, &b).unwrap();
            let direct = a.count_colorings(4, &b).unwrap();
            for j in 1..=4 {
                // j! labelings of each j-block partition use exactly j colors;
                // choosing which j of the 4 colors gives the falling factorial.
                let ff = crate::combinatorics::falling_factorial(4, j as u64).unwrap();
                assert_eq!(direct[j], parts[j] * ff, "{g:?} j={j}");
            }
        }
    }

    #[test]
    fn budget_errors() {
        let a = full(&Graph::cycle(10).unwrap());
        let tight = Budget { max_colorings: 100, ..Budget::default() };
        assert!(a.count_colorings(3, &tight).unwrap_err().is_budget());
        assert!(a.partition_counts(4, &tight).unwrap_err().is_budget());
    }
}
