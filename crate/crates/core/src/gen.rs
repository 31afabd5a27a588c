//! Exhaustive generation of small graphs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::iso::{canonical_code, CanonicalCode, MAX_CANONICAL_ORDER};
use crate::subset::VertexSubset;

/// Vertex pairs `(i, j)`, `i < j`, in graph6 order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labelled graph on `n` vertices, one per edge subset
/// (`2^(n(n-1)/2)` graphs). `n` must be in `1..=11`.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=11).contains(&n),
        "labelled enumeration supports 1..=11 vertices"
    );
    let pairs = pairs(n);
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
        .expect("valid edges")
    })
}

/// One representative per isomorphism class on `n` vertices, ordered by
/// canonical code. Built by adding a vertex with every possible
/// neighbourhood to each class of order `n - 1`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_CANONICAL_ORDER).contains(&n),
        "unlabelled enumeration supports 1..=16 vertices"
    );
    let mut level = alloc::vec![Graph::empty(1).expect("K1")];
    for k in 2..=n {
        let mut classes: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0..1u64 << (k - 1) {
                let nbrs = VertexSubset::from_bits(mask);
                let edges = g.edges().chain(nbrs.iter().map(|v| (v, k - 1)));
                let h = Graph::from_edges(k, edges).expect("valid edges");
                let code = canonical_code(&h).expect("small order");
                classes.entry(code).or_insert(h);
            }
        }
        level = classes.into_values().collect();
    }
    level
}
