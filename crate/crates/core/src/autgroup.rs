//! Fully enumerated automorphism groups.

use std::ops::ControlFlow;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::search::AutSearch;

/// Every element of an automorphism group, sorted lexicographically by image
/// array (so the identity comes first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn trivial(n: usize) -> AutGroup {
        AutGroup { degree: n, elements: vec![Permutation::identity(n)] }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Elements fixing `u`.
    pub fn stabilizer(&self, u: usize) -> Result<AutGroup> {
        if u >= self.degree {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.degree });
        }
        Ok(AutGroup {
            degree: self.degree,
            elements: self.elements.iter().filter(|p| p.apply(u) == u).cloned().collect(),
        })
    }

    /// The orbit of `u`, sorted.
    pub fn orbit(&self, u: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self.elements.iter().map(|p| p.apply(u)).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    /// Orbits of the vertex set, each sorted, listed by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for v in 0..self.degree {
            if !seen[v] {
                let o = self.orbit(v);
                for &w in &o {
                    seen[w] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Largest cycle count among non-identity elements; `None` for the trivial group.
    pub fn max_nonidentity_cycle_count(&self) -> Option<usize> {
        self.elements.iter().filter(|p| !p.is_identity()).map(Permutation::cycle_count).max()
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: p.len() });
    }
    Ok(g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

pub(crate) fn check_vertex_cap(g: &Graph, budget: &Budget) -> Result<()> {
    if g.order() > budget.max_vertices {
        Err(Error::TooManyVertices { n: g.order(), cap: budget.max_vertices })
    } else {
        Ok(())
    }
}

/// Walks every automorphism of `g` that preserves `labels`, stopping early
/// when `f` breaks. Visiting more than `budget.max_aut` elements is an error.
pub fn visit_automorphisms<F>(g: &Graph, labels: &[u32], budget: &Budget, mut f: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    check_vertex_cap(g, budget)?;
    if labels.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: labels.len() });
    }
    let mut seen: u64 = 0;
    let mut over = false;
    let flow = AutSearch::new(g, labels).visit(|img| {
        seen += 1;
        if seen > budget.max_aut {
            over = true;
            return ControlFlow::Break(());
        }
        f(img)
    });
    if over {
        Err(Error::GroupTooLarge { cap: budget.max_aut })
    } else {
        Ok(flow)
    }
}

/// The full automorphism group of `g`.
pub fn enumerate_automorphisms(g: &Graph, budget: &Budget) -> Result<AutGroup> {
    enumerate_preserving(g, &vec![0; g.order()], budget)
}

/// Automorphisms preserving a vertex labeling, e.g. a root or a coloring.
pub fn enumerate_preserving(g: &Graph, labels: &[u32], budget: &Budget) -> Result<AutGroup> {
    let mut elements = Vec::new();
    let _ = visit_automorphisms(g, labels, budget, |img| {
        elements.push(Permutation::from_raw(img.to_vec()));
        ControlFlow::Continue(())
    })?;
    elements.sort_unstable();
    Ok(AutGroup { degree: g.order(), elements })
}

/// `Aut(G, v)`, the automorphisms fixing `root`.
pub fn enumerate_rooted(g: &Graph, root: usize, budget: &Budget) -> Result<AutGroup> {
    g.check_vertex(root)?;
    enumerate_preserving(g, &root_labels(g.order(), root), budget)
}

pub(crate) fn root_labels(n: usize, root: usize) -> Vec<u32> {
    let mut l = vec![0; n];
    l[root] = 1;
    l
}

/// Order of the automorphism group without storing the elements.
pub fn group_order(g: &Graph, labels: &[u32], budget: &Budget) -> Result<u64> {
    let mut c = 0u64;
    let _ = visit_automorphisms(g, labels, budget, |_| {
        c += 1;
        ControlFlow::Continue(())
    })?;
    Ok(c)
}

/// Largest non-identity cycle count without storing the elements.
pub fn max_cycle_count(g: &Graph, labels: &[u32], budget: &Budget) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    let _ = visit_automorphisms(g, labels, budget, |img| {
        let p = Permutation::from_raw(img.to_vec());
        if !p.is_identity() {
            let c = p.cycle_count();
            best = Some(best.map_or(c, |b| b.max(c)));
        }
        ControlFlow::Continue(())
    })?;
    Ok(best)
}
