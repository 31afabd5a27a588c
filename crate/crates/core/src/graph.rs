//! Immutable simple undirected graphs with bitset adjacency rows.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::subset::VertexSubset;

/// Largest supported order; one adjacency row fits in a `u64`.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} outside 1..={MAX_ORDER}")]
    BadOrder(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

/// A simple undirected graph on vertices `0..n`, `1 <= n <= 64`.
///
/// Equality compares structure only; the optional label is ignored.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSubset>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        let mut adj = alloc::vec![VertexSubset::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, label: None })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, core::iter::empty())
    }

    /// Rows must already be symmetric and loop-free; checked in debug builds.
    pub(crate) fn from_rows(adj: Vec<VertexSubset>) -> Graph {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, row)| { !row.contains(u) && row.iter().all(|v| v < adj.len() && adj[v].contains(u)) }));
        Graph { adj, label: None }
    }

    #[must_use]
    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSubset {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSubset {
        VertexSubset::full(self.order())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertices reachable from `start` inside `within`. `start` must be in `within`.
    pub fn reach_within(&self, start: usize, within: VertexSubset) -> VertexSubset {
        let mut seen = VertexSubset::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSubset::EMPTY;
            for u in frontier {
                next = next.union(self.adj[u]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// True when `s` is nonempty and `G[s]` is connected.
    pub fn induces_connected(&self, s: VertexSubset) -> bool {
        match s.min() {
            Some(v) => self.reach_within(v, s) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertices())
    }

    /// Connected components of `G[within]` as vertex sets, ordered by minimum vertex.
    pub fn components_within(&self, within: VertexSubset) -> Vec<VertexSubset> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach_within(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSubset> {
        self.components_within(self.vertices())
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        if perm.len() != n {
            return Err(GraphError::BadPermutation(n));
        }
        let image: VertexSubset = perm.iter().copied().filter(|&p| p < n).collect();
        if image != self.vertices() {
            return Err(GraphError::BadPermutation(n));
        }
        let mut adj = alloc::vec![VertexSubset::EMPTY; n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph {
            adj,
            label: self.label.clone(),
        })
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(GraphError::BadOrder(total));
        }
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| VertexSubset::from_bits(row.bits() << n)),
        );
        Ok(Graph { adj, label: None })
    }

    /// Join `G + H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut g = self.disjoint_union(other)?;
        let left = VertexSubset::full(n);
        let right = VertexSubset::full(g.order()).difference(left);
        for u in left {
            g.adj[u] = g.adj[u].union(right);
        }
        for v in right {
            g.adj[v] = g.adj[v].union(left);
        }
        Ok(g)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        d.field("n", &self.order());
        if let Some(l) = &self.label {
            d.field("label", l);
        }
        d.field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}
