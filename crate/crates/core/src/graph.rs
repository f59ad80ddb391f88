//! Immutable simple graphs on at most 64 vertices, stored as per-vertex
//! adjacency bitsets.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::HARD_VERTEX_LIMIT;
use crate::error::{Error, Result};
use crate::iso;

/// A bitset over vertex ids `0..64`.
pub type VertexSet = u64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Bits strictly above `v`.
#[inline]
pub(crate) fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Iterates the members of a vertex bitset in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > HARD_VERTEX_LIMIT {
            return Err(Error::TooManyVertices { n, cap: HARD_VERTEX_LIMIT });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighborhood of `u` as a bitset.
    #[inline]
    pub fn neighbor_set(&self, u: usize) -> VertexSet {
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        Ok(members(self.adj[u]).collect())
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// All vertices as a bitset.
    pub fn vertex_set(&self) -> VertexSet {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.adj[u] & above(u)).map(move |v| (u, v)))
    }

    /// Removes `u`; vertices above `u` shift down by one (see [`deletion_shift`]).
    pub fn delete_vertex(&self, u: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        let adj = (0..self.n)
            .filter(|&v| v != u)
            .map(|v| squeeze_out(self.adj[v], u))
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                members(self.adj[v])
                    .filter(|&w| pos[w] != usize::MAX)
                    .fold(0, |acc, w| acc | bit(pos[w]))
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Applies a vertex relabeling: vertex `v` becomes `image[v]`.
    pub fn relabel(&self, image: &[usize]) -> Result<Graph> {
        if image.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: image.len() });
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(image[u], image[v])?;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph::from_adjacency(adj)
    }

    /// Vertex sets of the connected components, each found by breadth-first
    /// search from the lowest unvisited vertex.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut seen: VertexSet = 0;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s, 0);
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` without entering `blocked`.
    fn reach(&self, s: usize, blocked: VertexSet) -> VertexSet {
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= !comp & !blocked;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, 0) == self.vertex_set()
    }

    /// True iff connected, at least three vertices, and no cut vertex.
    pub fn is_2connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|u| {
            let start = if u == 0 { 1 } else { 0 };
            self.reach(start, bit(u)) == self.vertex_set() & !bit(u)
        })
    }

    /// Breadth-first visiting order starting at `s`, then at each lowest
    /// unvisited vertex.
    pub(crate) fn bfs_order(&self, starts: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut seen: VertexSet = 0;
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::new();
        for s in starts.into_iter().chain(0..self.n) {
            if seen & bit(s) != 0 {
                continue;
            }
            seen |= bit(s);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for w in members(self.adj[v] & !seen) {
                    seen |= bit(w);
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Path `P_n` with vertices in traversal order.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(invalid("path", "n must be at least 1"));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(invalid("cycle", "length must be at least 3"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(invalid("complete", "n must be at least 1"));
        }
        Ok(Graph::empty(n)?.complement())
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        if m == 0 || n == 0 {
            return Err(invalid("complete_bipartite", "both parts must be non-empty"));
        }
        let mut edges = Vec::with_capacity(m * n);
        for u in 0..m {
            for v in m..m + n {
                edges.push((u, v));
            }
        }
        Graph::new(m + n, &edges)
    }

    /// Star `K_{1,n}` with center 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        if leaves == 0 {
            return Err(invalid("star", "needs at least one leaf"));
        }
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges)
    }

    /// Kneser graph `K(n,k)`: the k-subsets of `0..n` in lexicographic order,
    /// adjacent when disjoint.
    pub fn kneser(n: usize, k: usize) -> Result<Graph> {
        if k == 0 || n < 2 * k {
            return Err(invalid("kneser", format!("need k >= 1 and n >= 2k, got n={n}, k={k}")));
        }
        let subsets = k_subsets(n, k);
        if subsets.len() > HARD_VERTEX_LIMIT {
            return Err(Error::TooManyVertices { n: subsets.len(), cap: HARD_VERTEX_LIMIT });
        }
        let mut g = Graph::empty(subsets.len())?;
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if subsets[i] & subsets[j] == 0 {
                    g.insert_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn petersen() -> Graph {
        Graph::kneser(5, 2).expect("K(5,2) is valid")
    }

    /// Builds one of the named families; see [`FamilyKind`] for the parameters.
    pub fn family(kind: FamilyKind, params: &[usize]) -> Result<Graph> {
        let need = kind.arity();
        if params.len() != need {
            return Err(invalid(kind.name(), format!("expected {need} parameter(s), got {}", params.len())));
        }
        match kind {
            FamilyKind::Path => Graph::path(params[0]),
            FamilyKind::Cycle => Graph::cycle(params[0]),
            FamilyKind::Complete => Graph::complete(params[0]),
            FamilyKind::CompleteBipartite => Graph::complete_bipartite(params[0], params[1]),
            FamilyKind::Empty => Graph::empty(params[0]),
            FamilyKind::Star => Graph::star(params[0]),
            FamilyKind::Kneser => Graph::kneser(params[0], params[1]),
        }
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        iso::is_isomorphic(self, other)
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidFamily { family, reason: reason.into() }
}

/// Removes bit `u` from `set` and shifts the higher bits down by one.
fn squeeze_out(set: VertexSet, u: usize) -> VertexSet {
    let low = set & (bit(u) - 1);
    let high = if u == 63 { 0 } else { (set >> (u + 1)) << u };
    low | high
}

/// Where vertex `v` lands after deleting `u`: `None` for `u` itself,
/// `v` below `u`, `v - 1` above.
pub fn deletion_shift(u: usize, v: usize) -> Option<usize> {
    match v.cmp(&u) {
        std::cmp::Ordering::Less => Some(v),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(v - 1),
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, acc | bit(i), out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Empty,
    Star,
    Kneser,
}

impl FamilyKind {
    fn arity(self) -> usize {
        match self {
            FamilyKind::CompleteBipartite | FamilyKind::Kneser => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Empty => "empty",
            FamilyKind::Star => "star",
            FamilyKind::Kneser => "kneser",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyKind> {
        Some(match s {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "complete_bipartite" | "bipartite" => FamilyKind::CompleteBipartite,
            "empty" => FamilyKind::Empty,
            "star" => FamilyKind::Star,
            "kneser" => FamilyKind::Kneser,
            _ => return None,
        })
    }
}

/// A graph with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<RootedGraph> {
        graph.check_vertex(root)?;
        Ok(RootedGraph { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Isomorphism that sends root to root.
    pub fn is_isomorphic(&self, other: &RootedGraph) -> bool {
        iso::is_rooted_isomorphic(&self.graph, self.root, &other.graph, other.root)
    }
}

/// Disjoint union with blocks laid out in input order; returns the start
/// offset of each block.
pub fn disjoint_union(graphs: &[Graph]) -> Result<(Graph, Vec<usize>)> {
    if graphs.is_empty() {
        return Err(Error::Precondition("disjoint union of an empty list".into()));
    }
    let total: usize = graphs.iter().map(Graph::order).sum();
    if total > HARD_VERTEX_LIMIT {
        return Err(Error::TooManyVertices { n: total, cap: HARD_VERTEX_LIMIT });
    }
    let mut adj = Vec::with_capacity(total);
    let mut offsets = Vec::with_capacity(graphs.len());
    for g in graphs {
        let off = adj.len();
        offsets.push(off);
        adj.extend(g.adj.iter().map(|a| a << off));
    }
    Ok((Graph::from_adjacency(adj), offsets))
}

/// Connected components grouped into isomorphism classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Vertex lists, in order of their lowest vertex.
    pub components: Vec<Vec<usize>>,
    /// Indices into `components`, one list per isomorphism class. Classes are
    /// ordered by component size, ties by first appearance.
    pub classes: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn component_graphs(&self, g: &Graph) -> Vec<Graph> {
        self.components.iter().map(|c| g.induced(c).expect("component vertices are in range")).collect()
    }
}

pub fn connected_components(g: &Graph) -> ComponentPartition {
    let components: Vec<Vec<usize>> = g.component_sets().into_iter().map(|s| members(s).collect()).collect();
    let graphs: Vec<Graph> = components.iter().map(|c| g.induced(c).expect("in range")).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, gi) in graphs.iter().enumerate() {
        match classes.iter_mut().find(|cls| iso::is_isomorphic(&graphs[cls[0]], gi)) {
            Some(cls) => cls.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes.sort_by_key(|cls| components[cls[0]].len());
    ComponentPartition { components, classes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn triangle_and_single_vertex() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(k3, Graph::cycle(3).unwrap());
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (1, 0), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g, Graph::path(4).unwrap());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn families() {
        assert_eq!(Graph::path(2).unwrap(), Graph::complete(2).unwrap());
        assert!(Graph::complete_bipartite(2, 2).unwrap().is_isomorphic(&Graph::cycle(4).unwrap()));
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::kneser(3, 2).is_err());
        assert!(Graph::family(FamilyKind::Kneser, &[5]).is_err());
        let s = Graph::family(FamilyKind::Star, &[3]).unwrap();
        assert_eq!(s.degree(0), 3);
    }

    #[test]
    fn petersen_edge_count_by_disjointness() {
        // Independent count: pairs of 2-subsets of {0..4} that are disjoint.
        let mut subsets = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                subsets.push([a, b]);
            }
        }
        let mut disjoint = 0;
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if subsets[i].iter().all(|x| !subsets[j].contains(x)) {
                    disjoint += 1;
                }
            }
        }
        let p = Graph::petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), disjoint);
        assert_eq!(disjoint, 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn vertex_deletion() {
        let k2 = Graph::complete(3).unwrap().delete_vertex(0).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());

        // 0-1-2-3 minus 1: survivors 0,2,3 relabel to 0,1,2; edge (2,3) -> (1,2).
        let g = Graph::path(4).unwrap().delete_vertex(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(edge_list(&g), vec![(1, 2)]);

        let e = Graph::new(1, &[]).unwrap().delete_vertex(0).unwrap();
        assert_eq!(e.order(), 0);
        assert!(Graph::path(3).unwrap().delete_vertex(3).is_err());

        assert_eq!(deletion_shift(1, 0), Some(0));
        assert_eq!(deletion_shift(1, 1), None);
        assert_eq!(deletion_shift(1, 3), Some(2));
    }

    #[test]
    fn deletion_at_high_bit() {
        let g = Graph::complete(64).unwrap();
        let h = g.delete_vertex(63).unwrap();
        assert_eq!(h, Graph::complete(63).unwrap());
        let h = g.delete_vertex(10).unwrap();
        assert_eq!(h.edge_count(), 63 * 62 / 2);
    }

    #[test]
    fn unions() {
        let k2 = Graph::complete(2).unwrap();
        let (g, off) = disjoint_union(&[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(off, vec![0, 2]);
        assert_eq!(edge_list(&g), vec![(0, 1), (2, 3)]);

        let (g, off) = disjoint_union(&[Graph::new(1, &[]).unwrap()]).unwrap();
        assert_eq!((g.order(), off), (1, vec![0]));

        let (g, _) = disjoint_union(&[Graph::path(3).unwrap(), Graph::complete(3).unwrap()]).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 2 + 3));
        assert!(disjoint_union(&[]).is_err());
    }

    #[test]
    fn components_and_classes() {
        let k2 = Graph::complete(2).unwrap();
        let (g, _) = disjoint_union(&[k2.clone(), k2.clone()]).unwrap();
        let cp = connected_components(&g);
        assert_eq!(cp.components.len(), 2);
        assert_eq!(cp.classes, vec![vec![0, 1]]);

        let (g, _) = disjoint_union(&[k2.clone(), Graph::new(1, &[]).unwrap()]).unwrap();
        let cp = connected_components(&g);
        assert_eq!(cp.components, vec![vec![0, 1], vec![2]]);
        assert_eq!(cp.classes, vec![vec![1], vec![0]]);

        let p3 = Graph::path(3).unwrap();
        let (g, _) = disjoint_union(&[p3.clone(), p3, Graph::complete(3).unwrap()]).unwrap();
        let cp = connected_components(&g);
        assert_eq!(cp.classes, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn two_connectivity() {
        assert!(Graph::cycle(4).unwrap().is_2connected());
        assert!(!Graph::path(4).unwrap().is_2connected());
        let k4e = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        // Independent check: every single-vertex deletion leaves a connected graph.
        assert!((0..4).all(|u| k4e.delete_vertex(u).unwrap().is_connected()));
        assert!(k4e.is_2connected());
        assert!(!Graph::complete(2).unwrap().is_2connected());
    }

    #[test]
    fn neighbors_query() {
        let p = Graph::path(3).unwrap();
        assert_eq!(p.neighbors(1).unwrap(), vec![0, 2]);
        assert!(p.neighbors(5).is_err());
    }
}
