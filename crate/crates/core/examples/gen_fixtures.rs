//! Regenerates `data/connected_n{N}.g6`: every connected graph on N vertices,
//! one per isomorphism class, for N = 1..=7.
//!
//! Each connected graph has a vertex whose removal leaves it connected (a
//! leaf of any spanning tree), so extending the connected graphs on N − 1
//! vertices by one vertex with every non-empty neighborhood reaches all
//! classes on N vertices.

use std::collections::HashMap;
use std::path::PathBuf;

use distinguish::io::graph6;
use distinguish::Graph;

fn invariant(g: &Graph) -> (usize, Vec<usize>) {
    let mut deg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    deg.sort_unstable();
    (g.edge_count(), deg)
}

fn extend(prev: &[Graph], n: usize) -> Vec<Graph> {
    let mut buckets: HashMap<(usize, Vec<usize>), Vec<Graph>> = HashMap::new();
    let mut out = Vec::new();
    for g in prev {
        let base: Vec<(usize, usize)> = g.edges().collect();
        for mask in 1u32..(1 << (n - 1)) {
            let mut edges = base.clone();
            edges.extend((0..n - 1).filter(|v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
            let h = Graph::new(n, &edges).expect("valid edges");
            let bucket = buckets.entry(invariant(&h)).or_default();
            if !bucket.iter().any(|x| x.is_isomorphic(&h)) {
                bucket.push(h.clone());
                out.push(h);
            }
        }
    }
    out
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut level = vec![Graph::empty(1).expect("K1")];
    for n in 1..=7 {
        if n > 1 {
            level = extend(&level, n);
        }
        let text: String = level.iter().map(|g| graph6::encode(g) + "\n").collect();
        let path = dir.join(format!("connected_n{n}.g6"));
        std::fs::write(&path, text).expect("write fixture");
        println!("{}: {} graphs", path.display(), level.len());
    }
}
