//! Exact isomorphism and canonical codes for small graphs.
//!
//! Vertices are first coloured by iterated degree refinement. The colouring
//! depends only on the isomorphism class, so the canonical code can be taken
//! as the largest adjacency code over all vertex orders that list colour
//! classes in increasing colour. The search over those orders is a
//! branch-and-bound on the code prefix.

use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Graph;
use crate::subset::VertexSubset;

/// Largest order with a canonical code (16 choose 2 = 120 bits).
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Default order limit for [`are_isomorphic_small`].
pub const DEFAULT_ISO_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("graph order {order} exceeds the isomorphism limit {limit}")]
    TooLarge { order: usize, limit: usize },
}

/// Stable colour refinement starting from degrees. Colours are ranks of
/// signatures, so equal colourings up to relabelling for isomorphic graphs.
pub fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_classes(&colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = alloc::vec![0; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let next_classes = rank + 1;
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Isomorphism-invariant code: equal for two graphs iff they are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub order: usize,
    pub bits: u128,
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    /// cell colour required at each position
    slot_color: Vec<usize>,
    colors: Vec<usize>,
    order: Vec<usize>,
    best: Option<u128>,
    total_bits: u32,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, used: VertexSubset, prefix: u128, bits: u32, tied: bool) {
        if pos == self.n {
            if self.best.is_none_or(|b| prefix > b) {
                self.best = Some(prefix);
            }
            return;
        }
        for v in 0..self.n {
            if used.contains(v) || self.colors[v] != self.slot_color[pos] {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order[..pos] {
                code = code << 1 | self.g.has_edge(u, v) as u128;
            }
            let nbits = bits + pos as u32;
            let mut still_tied = tied;
            if let (Some(best), true) = (self.best, tied) {
                let best_prefix = if nbits == 0 {
                    0
                } else {
                    best >> (self.total_bits - nbits)
                };
                if code < best_prefix {
                    continue;
                }
                still_tied = code == best_prefix;
            }
            self.order.push(v);
            self.run(
                pos + 1,
                used.with(v),
                code,
                nbits,
                still_tied || self.best.is_none(),
            );
            self.order.pop();
        }
    }
}

/// Canonical code of a graph with at most [`MAX_CANONICAL_ORDER`] vertices.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, IsoError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(IsoError::TooLarge {
            order: n,
            limit: MAX_CANONICAL_ORDER,
        });
    }
    let colors = refined_colors(g);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut s = Search {
        g,
        n,
        slot_color,
        colors,
        order: Vec::with_capacity(n),
        best: None,
        total_bits: (n * (n - 1) / 2) as u32,
    };
    s.run(0, VertexSubset::EMPTY, 0, 0, true);
    Ok(CanonicalCode {
        order: n,
        bits: s.best.expect("at least one ordering"),
    })
}

/// Exact isomorphism test for graphs of order at most `limit` (capped at
/// [`MAX_CANONICAL_ORDER`]).
pub fn are_isomorphic_small(g: &Graph, h: &Graph, limit: usize) -> Result<bool, IsoError> {
    let limit = limit.min(MAX_CANONICAL_ORDER);
    for order in [g.order(), h.order()] {
        if order > limit {
            return Err(IsoError::TooLarge { order, limit });
        }
    }
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}
