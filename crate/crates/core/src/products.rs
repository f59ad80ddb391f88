//! The four graph operations: vertex-sum, smooth rooted product, corona and
//! lexicographic product. Each returns the product together with a layout
//! that records where every factor vertex landed.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::autgroup::visit_automorphisms;
use crate::config::{Budget, HARD_VERTEX_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    VertexSum,
    Rooted,
    Corona,
    Lexicographic,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::VertexSum => "vertex_sum",
            ProductKind::Rooted => "rooted",
            ProductKind::Corona => "corona",
            ProductKind::Lexicographic => "lexicographic",
        }
    }
}

/// Where factor vertices sit in a product.
///
/// Factor numbering per kind:
/// - vertex-sum: factor `i` is the `i`-th input;
/// - rooted and corona: factor 0 is `G`, factor `1 + i` is the copy of `H`
///   attached to vertex `i` of `G`;
/// - lexicographic: factor `x` is the fiber `{x} × V(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductLayout {
    pub kind: ProductKind,
    pub to_product: Vec<Vec<usize>>,
    /// The central vertex of a vertex-sum, or the ids carrying `V(G)` in a
    /// rooted or corona product. Empty for lexicographic products.
    pub special: Vec<usize>,
    pub order: usize,
}

impl ProductLayout {
    /// All `(factor, vertex)` pairs mapped to product vertex `p`.
    pub fn preimages(&self, p: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (f, map) in self.to_product.iter().enumerate() {
            for (v, &q) in map.iter().enumerate() {
                if q == p {
                    out.push((f, v));
                }
            }
        }
        out
    }

    /// Every product vertex is hit, and only identified vertices are hit twice.
    pub fn check(&self) -> Result<()> {
        let mut hits = vec![0usize; self.order];
        for &q in self.to_product.iter().flatten() {
            if q >= self.order {
                return Err(Error::VertexOutOfRange { vertex: q, n: self.order });
            }
            hits[q] += 1;
        }
        for (p, &h) in hits.iter().enumerate() {
            let allowed = h == 1 || (h > 1 && self.special.contains(&p) && self.kind != ProductKind::Lexicographic);
            if !allowed {
                return Err(Error::Precondition(format!("product vertex {p} has {h} preimages")));
            }
        }
        Ok(())
    }
}

fn check_total(n: usize) -> Result<()> {
    if n > HARD_VERTEX_LIMIT {
        Err(Error::TooManyVertices { n, cap: HARD_VERTEX_LIMIT })
    } else {
        Ok(())
    }
}

fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if g.order() == 0 || !g.is_connected() {
        Err(Error::Precondition(format!("{what} must be connected and non-empty")))
    } else {
        Ok(())
    }
}

fn require_nonempty(g: &Graph, what: &str) -> Result<()> {
    if g.order() == 0 {
        Err(Error::Precondition(format!("{what} must have at least one vertex")))
    } else {
        Ok(())
    }
}

/// Identifies the roots of all factors into one central vertex (id 0). The
/// non-root vertices of factor `i` follow in one block, in their original
/// order.
pub fn vertex_sum(factors: &[RootedGraph]) -> Result<(Graph, ProductLayout)> {
    if factors.len() < 2 {
        return Err(Error::Precondition("a vertex-sum needs at least two factors".into()));
    }
    for (i, f) in factors.iter().enumerate() {
        require_connected(f.graph(), &format!("vertex-sum factor {i}"))?;
    }
    let n = 1 + factors.iter().map(|f| f.graph().order() - 1).sum::<usize>();
    check_total(n)?;
    let mut g = Graph::empty(n)?;
    let mut to_product = Vec::with_capacity(factors.len());
    let mut next = 1;
    for f in factors {
        let map: Vec<usize> = (0..f.graph().order())
            .map(|v| {
                if v == f.root() {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        for (u, v) in f.graph().edges() {
            g.insert_edge(map[u], map[v])?;
        }
        to_product.push(map);
    }
    Ok((g, ProductLayout { kind: ProductKind::VertexSum, to_product, special: vec![0], order: n }))
}

/// `t` copies of `g` summed at `u`.
pub fn vertex_sum_power(g: &Graph, u: usize, t: usize) -> Result<(Graph, ProductLayout)> {
    if t < 2 {
        return Err(Error::Precondition("a vertex-sum power needs t ≥ 2".into()));
    }
    let rooted = RootedGraph::new(g.clone(), u)?;
    vertex_sum(&vec![rooted; t])
}

/// Offset of `y` inside a block that lists the root first.
fn root_first(y: usize, root: usize) -> usize {
    match y.cmp(&root) {
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => y + 1,
        std::cmp::Ordering::Greater => y,
    }
}

/// `G_s(H)`: a copy of `H` hangs from every vertex of `G`, its root
/// identified with that vertex. Copy `i` fills `[i|H|, (i+1)|H|)`, root first.
pub fn rooted_product_smooth(g: &Graph, h: &RootedGraph) -> Result<(Graph, ProductLayout)> {
    require_connected(g, "G")?;
    require_connected(h.graph(), "H")?;
    let (gn, hn) = (g.order(), h.graph().order());
    check_total(gn * hn)?;
    let mut p = Graph::empty(gn * hn)?;
    let block: Vec<usize> = (0..hn).map(|y| root_first(y, h.root())).collect();
    let base: Vec<usize> = (0..gn).map(|i| i * hn).collect();
    for (a, b) in g.edges() {
        p.insert_edge(base[a], base[b])?;
    }
    let mut to_product = vec![base.clone()];
    for i in 0..gn {
        let map: Vec<usize> = block.iter().map(|&off| i * hn + off).collect();
        for (u, v) in h.graph().edges() {
            p.insert_edge(map[u], map[v])?;
        }
        to_product.push(map);
    }
    Ok((p, ProductLayout { kind: ProductKind::Rooted, to_product, special: base, order: gn * hn }))
}

/// `G ⊙ H`: `V(G)` first, then copy `i` of `H` in block `|G| + i|H|`, every
/// vertex of it joined to vertex `i` of `G`.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, ProductLayout)> {
    require_nonempty(g, "G")?;
    require_nonempty(h, "H")?;
    let (gn, hn) = (g.order(), h.order());
    let n = gn * (hn + 1);
    check_total(n)?;
    let mut p = Graph::empty(n)?;
    for (a, b) in g.edges() {
        p.insert_edge(a, b)?;
    }
    let mut to_product = vec![(0..gn).collect::<Vec<_>>()];
    for i in 0..gn {
        let start = gn + i * hn;
        let map: Vec<usize> = (start..start + hn).collect();
        for (u, v) in h.edges() {
            p.insert_edge(map[u], map[v])?;
        }
        for &w in &map {
            p.insert_edge(i, w)?;
        }
        to_product.push(map);
    }
    Ok((p, ProductLayout { kind: ProductKind::Corona, to_product, special: (0..gn).collect(), order: n }))
}

/// `G ∘ H` with `(x, y)` at id `x|H| + y`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<(Graph, ProductLayout)> {
    require_nonempty(g, "G")?;
    require_nonempty(h, "H")?;
    let (gn, hn) = (g.order(), h.order());
    check_total(gn * hn)?;
    let mut p = Graph::empty(gn * hn)?;
    for (x, xx) in g.edges() {
        for y in 0..hn {
            for yy in 0..hn {
                p.insert_edge(x * hn + y, xx * hn + yy)?;
            }
        }
    }
    for x in 0..gn {
        for (y, yy) in h.edges() {
            p.insert_edge(x * hn + y, x * hn + yy)?;
        }
    }
    let to_product = (0..gn).map(|x| (x * hn..(x + 1) * hn).collect()).collect();
    Ok((p, ProductLayout { kind: ProductKind::Lexicographic, to_product, special: Vec::new(), order: gn * hn }))
}

/// True iff every automorphism of `G ∘ H` carries each fiber `{x} × V(H)`
/// onto a fiber. Stops at the first fiber-mixing element, so a non-natural
/// product with a huge group is usually settled quickly.
pub fn all_automorphisms_natural(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    let (p, _) = lexicographic(g, h)?;
    let hn = h.order();
    let flow = visit_automorphisms(&p, &vec![0; p.order()], budget, |img| {
        let mixes = (0..g.order()).any(|x| {
            let target = img[x * hn] as usize / hn;
            (x * hn..(x + 1) * hn).any(|v| img[v] as usize / hn != target)
        });
        if mixes {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(flow.is_continue())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::{enumerate_automorphisms, group_order};

    fn rooted(g: Graph, r: usize) -> RootedGraph {
        RootedGraph::new(g, r).unwrap()
    }

    fn paw() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k4_minus_edge() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn vertex_sums() {
        let k3 = Graph::complete(3).unwrap();
        let (f2, layout) = vertex_sum_power(&k3, 1, 2).unwrap();
        assert_eq!((f2.order(), f2.edge_count()), (5, 6));
        assert_eq!(f2.degree(0), 4);
        layout.check().unwrap();
        assert_eq!(layout.to_product, vec![vec![1, 0, 2], vec![3, 0, 4]]);
        assert_eq!(layout.preimages(0), vec![(0, 1), (1, 1)]);

        let (p7, _) = vertex_sum_power(&Graph::path(4).unwrap(), 0, 2).unwrap();
        assert!(p7.is_isomorphic(&Graph::path(7).unwrap()));

        let (g, _) = vertex_sum_power(&Graph::cycle(4).unwrap(), 2, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 12));

        let (fig1, _) = vertex_sum(&[rooted(k3, 0), rooted(k4_minus_edge(), 0)]).unwrap();
        assert_eq!((fig1.order(), fig1.edge_count()), (6, 8));

        let (s5, _) = vertex_sum(&[rooted(Graph::star(3).unwrap(), 0), rooted(Graph::path(3).unwrap(), 1)]).unwrap();
        assert!(s5.is_isomorphic(&Graph::star(5).unwrap()));

        let disconnected = Graph::empty(2).unwrap();
        assert!(vertex_sum(&[rooted(disconnected, 0), rooted(Graph::path(2).unwrap(), 0)]).is_err());
        assert!(vertex_sum_power(&Graph::path(2).unwrap(), 0, 1).is_err());
    }

    #[test]
    fn central_vertex_is_fixed() {
        let k3 = Graph::complete(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        for (g, _) in [
            vertex_sum_power(&k3, 0, 3).unwrap(),
            vertex_sum_power(&c4, 0, 2).unwrap(),
            vertex_sum(&[rooted(k3, 0), rooted(Graph::complete(4).unwrap(), 0)]).unwrap(),
        ] {
            let aut = enumerate_automorphisms(&g, &Budget::default()).unwrap();
            assert!(aut.elements().iter().all(|p| p.apply(0) == 0));
        }
    }

    #[test]
    fn rooted_products() {
        let p2 = Graph::path(2).unwrap();
        let (p4, layout) = rooted_product_smooth(&p2, &rooted(p2.clone(), 0)).unwrap();
        assert!(p4.is_isomorphic(&Graph::path(4).unwrap()));
        layout.check().unwrap();

        let (p6, layout) = rooted_product_smooth(&p2, &rooted(Graph::path(3).unwrap(), 0)).unwrap();
        assert!(p6.is_isomorphic(&Graph::path(6).unwrap()));
        assert_eq!(layout.special, vec![0, 3]);

        // Rooting at the last vertex still lists the root first.
        let (_, layout) = rooted_product_smooth(&p2, &rooted(Graph::path(3).unwrap(), 2)).unwrap();
        assert_eq!(layout.to_product[1], vec![1, 2, 0]);

        let (fig3, _) = rooted_product_smooth(&paw(), &rooted(Graph::cycle(4).unwrap(), 0)).unwrap();
        assert_eq!((fig3.order(), fig3.edge_count()), (16, 4 + 4 * 4));
    }

    #[test]
    fn coronas() {
        let (k3, layout) = corona(&Graph::new(1, &[]).unwrap(), &Graph::path(2).unwrap()).unwrap();
        assert!(k3.is_isomorphic(&Graph::complete(3).unwrap()));
        layout.check().unwrap();
        let (p4, _) = corona(&Graph::path(2).unwrap(), &Graph::new(1, &[]).unwrap()).unwrap();
        assert!(p4.is_isomorphic(&Graph::path(4).unwrap()));
        assert_eq!(p4.max_degree(), 2);

        let (fig4, layout) = corona(&paw(), &Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((fig4.order(), fig4.edge_count()), (20, 4 + 16 + 16));
        assert_eq!(layout.to_product[2], vec![8, 9, 10, 11]);
    }

    #[test]
    fn lexicographic_products() {
        let p3 = Graph::path(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let (fig5, layout) = lexicographic(&p3, &k3).unwrap();
        assert_eq!((fig5.order(), fig5.edge_count()), (9, 27));
        layout.check().unwrap();
        assert_eq!(layout.to_product[1], vec![3, 4, 5]);

        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(lexicographic(&k1, &p3).unwrap().0, p3);
        assert_eq!(lexicographic(&p3, &k1).unwrap().0, p3);
        let p2 = Graph::path(2).unwrap();
        assert_eq!(lexicographic(&p2, &p2).unwrap().0, Graph::complete(4).unwrap());
    }

    #[test]
    fn naturality() {
        let b = Budget::default();
        let p2 = Graph::path(2).unwrap();
        let k1 = Graph::new(1, &[]).unwrap();
        assert!(!all_automorphisms_natural(&p2, &p2, &b).unwrap());
        assert!(all_automorphisms_natural(&Graph::cycle(5).unwrap(), &k1, &b).unwrap());
        // P3 ∘ K2 is K2 joined to 2K2: the two universal vertices form the
        // middle fiber and the outer fibers are the two K2 components.
        assert!(all_automorphisms_natural(&Graph::path(3).unwrap(), &p2, &b).unwrap());
        // K2 ∘ E2 = K_{2,2}, whose two sides are exactly the fibers.
        assert!(all_automorphisms_natural(&p2, &Graph::empty(2).unwrap(), &b).unwrap());
        // Large non-natural product settled without exhausting the budget.
        let tight = Budget { max_aut: 1000, ..Budget::default() };
        assert!(!all_automorphisms_natural(&Graph::complete(3).unwrap(), &Graph::complete(4).unwrap(), &tight).unwrap());
    }

    #[test]
    fn counts_match_closed_forms() {
        let gs = [Graph::path(3).unwrap(), Graph::cycle(4).unwrap(), paw(), Graph::complete(3).unwrap()];
        for g in &gs {
            for h in &gs {
                let (r, _) = rooted_product_smooth(g, &rooted(h.clone(), 0)).unwrap();
                assert_eq!(r.order(), g.order() * h.order());
                assert_eq!(r.edge_count(), g.edge_count() + g.order() * h.edge_count());
                let (c, _) = corona(g, h).unwrap();
                assert_eq!(c.order(), g.order() * (h.order() + 1));
                assert_eq!(c.edge_count(), g.edge_count() + g.order() * (h.edge_count() + h.order()));
                let (l, _) = lexicographic(g, h).unwrap();
                assert_eq!(l.edge_count(), g.edge_count() * h.order().pow(2) + g.order() * h.edge_count());
            }
        }
        assert!(lexicographic(&Graph::complete(9).unwrap(), &Graph::complete(8).unwrap()).is_err());
    }

    #[test]
    fn rooted_group_order_small() {
        let b = Budget::default();
        let g = Graph::path(3).unwrap();
        let h = rooted(Graph::path(3).unwrap(), 1);
        let (p, _) = rooted_product_smooth(&g, &h).unwrap();
        // |Aut(P3)| · |Stab(center)|^3 = 2 · 2^3
        assert_eq!(group_order(&p, &vec![0; p.order()], &b).unwrap(), 16);
    }
}
