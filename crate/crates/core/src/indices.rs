//! Symmetry-breaking indices: distinguishing tests, the distinguishing number
//! and threshold, distinguishing-coloring counts, rooted variants, steady
//! vertices and ν of a union of asymmetric graphs.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::action::{PhiRow, SymmetryAction};
use crate::autgroup::{group_order, root_labels, visit_automorphisms, AutGroup};
use crate::coloring::{complete_partitions, partition_prefixes, Coloring};
use crate::combinatorics::binomial;
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::graph::{bit, connected_components, deletion_shift, members, Graph, RootedGraph};

fn check_len(g: &Graph, group: &AutGroup, c: &Coloring) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: c.len() });
    }
    if group.degree() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: group.degree() });
    }
    Ok(())
}

/// True iff no non-identity element of `group` preserves `c`.
pub fn is_distinguishing(g: &Graph, group: &AutGroup, c: &Coloring) -> Result<bool> {
    check_len(g, group, c)?;
    let colors = c.colors();
    Ok(!group
        .elements()
        .iter()
        .filter(|p| !p.is_identity())
        .any(|p| (0..g.order()).all(|v| colors[v] == colors[p.apply(v)])))
}

/// True iff some `α` in `group` has `c1(v) = c2(α(v))` for every vertex.
pub fn are_equivalent(g: &Graph, group: &AutGroup, c1: &Coloring, c2: &Coloring) -> Result<bool> {
    check_len(g, group, c1)?;
    check_len(g, group, c2)?;
    let (a, b) = (c1.colors(), c2.colors());
    Ok(group.elements().iter().any(|p| (0..g.order()).all(|v| a[v] == b[p.apply(v)])))
}

/// `D(G)`.
pub fn distinguishing_number(g: &Graph, budget: &Budget) -> Result<usize> {
    SymmetryAction::full(g, budget)?.distinguishing_number(budget)
}

/// `θ(G)`: one more than the largest cycle count of a non-identity
/// automorphism, or 1 for an asymmetric graph.
pub fn distinguishing_threshold(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(SymmetryAction::full(g, budget)?.theta())
}

/// `(Φ_k(G), φ_k(G))`.
pub fn phi(g: &Graph, k: usize, budget: &Budget) -> Result<(u64, u64)> {
    if k == 0 {
        return Err(Error::Precondition("palette size must be at least 1".into()));
    }
    let rows = SymmetryAction::full(g, budget)?.phi_rows(k, budget)?;
    let last = rows[k - 1];
    Ok((last.phi, last.varphi))
}

/// Φ/φ rows for `k = 1..=k_max` together with the threshold that split the
/// enumerated rows from the closed-form ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiTable {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph_id: Option<String>,
    pub theta: usize,
    pub rows: Vec<PhiRow>,
}

impl PhiTable {
    /// Checks monotonicity, the binomial relation between the two counts, and
    /// that nothing is counted below `d`.
    pub fn check(&self, d: usize) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(msg));
        for w in self.rows.windows(2) {
            if w[1].phi < w[0].phi {
                return fail(format!("Φ decreases from k={} to k={}", w[0].k, w[1].k));
            }
        }
        for row in &self.rows {
            if row.k < d && (row.phi != 0 || row.varphi != 0) {
                return fail(format!("non-zero count at k={} below D={d}", row.k));
            }
            let mut sum = 0u64;
            for inner in self.rows.iter().take_while(|r| r.k <= row.k) {
                sum += binomial(row.k as u64, inner.k as u64)? * inner.varphi;
            }
            if sum != row.phi {
                return fail(format!("binomial relation fails at k={}: {} != {}", row.k, sum, row.phi));
            }
        }
        Ok(())
    }
}

/// Bundled indices for one graph (or one rooted graph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub n: usize,
    pub edges: usize,
    #[serde(rename = "D")]
    pub d: usize,
    pub theta: usize,
    pub aut_order: u64,
    pub phi_table: PhiTable,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub steady_vertices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<usize>,
}

fn report_for(action: &SymmetryAction, phi_max: usize, budget: &Budget) -> Result<IndexReport> {
    let g = action.graph();
    let d = action.distinguishing_number(budget)?;
    let theta = action.theta();
    let rows = action.phi_rows(phi_max, budget)?;
    Ok(IndexReport {
        n: g.order(),
        edges: g.edge_count(),
        d,
        theta,
        aut_order: action.aut_order(),
        phi_table: PhiTable { graph_id: None, theta, rows },
        steady_vertices: None,
        root: None,
    })
}

/// D, θ, |Aut| and the Φ table up to `phi_max`; steady vertices on request.
pub fn analyze(g: &Graph, phi_max: usize, with_steady: bool, budget: &Budget) -> Result<IndexReport> {
    let action = SymmetryAction::full(g, budget)?;
    let mut report = report_for(&action, phi_max, budget)?;
    if with_steady {
        report.steady_vertices = Some(steady_vertices(g, budget)?);
    }
    Ok(report)
}

/// `D(H,v)`, `θ(H,v)` and `Φ_k(H,v)` with respect to the stabilizer of the
/// root. Colorings range over all of `V(H)`, the root included.
pub fn rooted_indices(h: &RootedGraph, phi_max: usize, budget: &Budget) -> Result<IndexReport> {
    let action = SymmetryAction::rooted(h, budget)?;
    let mut report = report_for(&action, phi_max, budget)?;
    report.root = Some(h.root());
    Ok(report)
}

/// True iff every automorphism of `G - u` maps `N_G(u)` onto itself.
pub fn is_steady(g: &Graph, u: usize, budget: &Budget) -> Result<bool> {
    g.check_vertex(u)?;
    let rest = g.delete_vertex(u)?;
    let nbhd = members(g.neighbor_set(u)).fold(0u64, |m, w| m | bit(deletion_shift(u, w).unwrap()));
    let flow = visit_automorphisms(&rest, &vec![0; rest.order()], budget, |img| {
        let mapped = members(nbhd).fold(0u64, |m, w| m | bit(img[w] as usize));
        if mapped == nbhd {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })?;
    Ok(flow.is_continue())
}

/// Steadiness straight from the definition: `|Stab(u)| = |Aut(G - u)|`.
/// Restriction embeds the stabilizer into `Aut(G - u)`, so equal orders
/// mean isomorphic groups.
pub fn is_steady_by_orders(g: &Graph, u: usize, budget: &Budget) -> Result<bool> {
    g.check_vertex(u)?;
    let stab = group_order(g, &root_labels(g.order(), u), budget)?;
    let rest = g.delete_vertex(u)?;
    Ok(stab == group_order(&rest, &vec![0; rest.order()], budget)?)
}

/// Whether every distinguishing coloring of `G` stays distinguishing on
/// `G − u`, by enumerating all set partitions of `V(G)`. Colorings with the
/// same partition are distinguishing together, so partitions suffice.
pub fn restriction_property(g: &Graph, u: usize, budget: &Budget) -> Result<bool> {
    g.check_vertex(u)?;
    let n = g.order();
    let whole = SymmetryAction::full(g, budget)?;
    let rest = SymmetryAction::full(&g.delete_vertex(u)?, budget)?;
    let mut total: u128 = 0;
    for k in 1..=n {
        total += u128::from(crate::combinatorics::stirling2(n as u64, k as u64)?);
    }
    if total > u128::from(budget.max_colorings) {
        return Err(Error::ColoringBudget { required: total, budget: budget.max_colorings });
    }
    let mut restricted = vec![0u8; n.saturating_sub(1)];
    let root = &partition_prefixes(n, 0, 1, n)[0];
    let violated = complete_partitions(n, root, 1, n, &mut |blocks, _| {
        if !whole.is_distinguishing(blocks) {
            return false;
        }
        for (slot, &b) in restricted.iter_mut().zip(blocks.iter().enumerate().filter(|&(v, _)| v != u).map(|(_, b)| b)) {
            *slot = b;
        }
        !rest.is_distinguishing(&restricted)
    });
    Ok(!violated)
}

pub fn steady_vertices(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        if is_steady(g, u, budget)? {
            out.push(u);
        }
    }
    Ok(out)
}

/// `ν(G)` for a graph whose components are all asymmetric: the component
/// size of the smallest isomorphism class with at least two members, or
/// `|G|` when no class repeats.
pub fn nu(g: &Graph, budget: &Budget) -> Result<usize> {
    let cp = connected_components(g);
    for (i, comp) in cp.component_graphs(g).iter().enumerate() {
        if group_order(comp, &vec![0; comp.order()], budget)? != 1 {
            return Err(Error::Precondition(format!(
                "ν needs asymmetric components; component {i} has a non-trivial automorphism"
            )));
        }
    }
    Ok(cp
        .classes
        .iter()
        .find(|cls| cls.len() > 1)
        .map_or(g.order(), |cls| cp.components[cls[0]].len()))
}
