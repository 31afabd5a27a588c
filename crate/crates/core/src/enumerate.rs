//! Connected induced subset enumeration and the defensive alliance polynomial.
//!
//! Every connected set is generated exactly once, from its minimum vertex.
//! A branch holds the current set `S`, its candidate extensions (neighbours
//! of `S` that are not forbidden) and a forbidden set. After a candidate has
//! been explored it is forbidden for the remaining siblings, so two branches
//! never produce the same set.
//!
//! The walker keeps `deg_S(u)` for every `u` in `S` and updates it when a
//! vertex enters or leaves, so `f(S) = n + min (2 deg_S(u) - deg(u))` costs
//! one pass over `S` and no popcounts.

use core::ops::ControlFlow;

use thiserror::Error;

use crate::bipoly::BiPoly;
use crate::graph::{Graph, MAX_ORDER};
use crate::subset::VertexSubset;

/// Default cap on visited subsets.
pub const DEFAULT_MAX_SUBGRAPHS: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex subset {0:?} is not contained in the graph")]
    SubsetOutOfRange(VertexSubset),
    #[error("k = {k} outside -{max_degree}..={max_degree}")]
    KOutOfRange { k: i64, max_degree: usize },
    #[error("enumeration guard of {limit} subsets exceeded after {visited} subsets")]
    GuardExceeded { limit: u64, visited: u64 },
    #[error("incremental f_y = {incremental} but direct f_y = {direct} at {subset:?}")]
    IncrementalMismatch {
        subset: VertexSubset,
        incremental: u32,
        direct: u32,
    },
}

/// `f_y(S) = min_{u in S} (deg_S(u) - deg_out(u) + n)`.
///
/// Always within `n - Δ ..= n + Δ`, hence positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AllianceValue(pub u32);

impl AllianceValue {
    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Abort once more than this many subsets would be visited.
    pub max_subgraphs: u64,
    /// Split the root loop across threads. Honoured by the std companion
    /// crate; the functions in this crate always run on the calling thread.
    pub parallel: bool,
    /// Recompute `f_y` from scratch at every visited set and fail on mismatch.
    pub check_incremental: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_subgraphs: DEFAULT_MAX_SUBGRAPHS,
            parallel: false,
            check_incremental: false,
        }
    }
}

impl EnumConfig {
    pub fn with_guard(max_subgraphs: u64) -> Self {
        EnumConfig {
            max_subgraphs: max_subgraphs.max(1),
            ..Self::default()
        }
    }
}

fn check_subset(g: &Graph, s: VertexSubset) -> Result<(), EnumError> {
    if s.is_empty() {
        return Err(EnumError::EmptySubset);
    }
    if !s.is_subset_of(g.vertices()) {
        return Err(EnumError::SubsetOutOfRange(s));
    }
    Ok(())
}

/// `f_y(S)` computed directly from the adjacency rows. Connectivity of
/// `G[S]` is irrelevant here.
pub fn alliance_value(g: &Graph, s: VertexSubset) -> Result<AllianceValue, EnumError> {
    check_subset(g, s)?;
    let n = g.order() as i64;
    let min = s
        .iter()
        .map(|u| 2 * g.neighbors(u).intersection_len(s) as i64 - g.degree(u) as i64)
        .min()
        .expect("nonempty");
    Ok(AllianceValue((min + n) as u32))
}

/// `δ_S(v) - δ_out(v) >= k` for every `v` in `S`, with `-Δ <= k <= Δ`.
pub fn is_defensive_k_alliance(g: &Graph, s: VertexSubset, k: i64) -> Result<bool, EnumError> {
    let max_degree = g.max_degree();
    if k.unsigned_abs() > max_degree as u64 {
        return Err(EnumError::KOutOfRange { k, max_degree });
    }
    let f = alliance_value(g, s)?;
    Ok(i64::from(f.0) >= g.order() as i64 + k)
}

/// `k = -1`. Unlike the general k-alliance test, valid on edgeless graphs.
pub fn is_defensive_alliance(g: &Graph, s: VertexSubset) -> Result<bool, EnumError> {
    let f = alliance_value(g, s)?;
    Ok(f.0 as usize + 1 >= g.order())
}

/// `k = 0`.
pub fn is_strong_defensive_alliance(g: &Graph, s: VertexSubset) -> Result<bool, EnumError> {
    let f = alliance_value(g, s)?;
    Ok(f.0 as usize >= g.order())
}

struct Walker<'g, F> {
    g: &'g Graph,
    n: i32,
    degree: [i32; MAX_ORDER],
    inside: [i32; MAX_ORDER],
    visit: F,
}

impl<F> Walker<'_, F>
where
    F: FnMut(VertexSubset, AllianceValue) -> ControlFlow<()>,
{
    #[inline]
    fn value(&self, s: VertexSubset) -> AllianceValue {
        let mut min = i32::MAX;
        for u in s {
            min = min.min(2 * self.inside[u] - self.degree[u]);
        }
        AllianceValue((min + self.n) as u32)
    }

    fn extend(&mut self, s: VertexSubset, cand: VertexSubset, mut forbid: VertexSubset) -> ControlFlow<()> {
        let value = self.value(s);
        (self.visit)(s, value)?;
        for w in cand {
            let touched = self.g.neighbors(w).intersection(s);
            for u in touched {
                self.inside[u] += 1;
            }
            self.inside[w] = touched.len() as i32;

            let grown = s.with(w);
            let next = cand
                .union(self.g.neighbors(w))
                .difference(grown)
                .difference(forbid);
            let flow = self.extend(grown, next, forbid);

            for u in touched {
                self.inside[u] -= 1;
            }
            flow?;
            forbid.insert(w);
        }
        ControlFlow::Continue(())
    }
}

/// Visits every connected set whose minimum vertex is `root`, together with
/// its `f_y`. Stops early when `visit` breaks.
///
/// The subset handed to `visit` is a value; nothing is retained between calls.
pub fn walk_root<F>(g: &Graph, root: usize, visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSubset, AllianceValue) -> ControlFlow<()>,
{
    assert!(root < g.order(), "root {root} out of range");
    let mut w = Walker {
        g,
        n: g.order() as i32,
        degree: [0; MAX_ORDER],
        inside: [0; MAX_ORDER],
        visit,
    };
    for v in 0..g.order() {
        w.degree[v] = g.degree(v) as i32;
    }
    let forbid = VertexSubset::full(root);
    let cand = g.neighbors(root).difference(forbid);
    w.extend(VertexSubset::singleton(root), cand, forbid)
}

/// Compares an incrementally maintained `f_y` with the direct computation.
pub fn verify_value(g: &Graph, s: VertexSubset, value: AllianceValue) -> Result<(), EnumError> {
    let direct = alliance_value(g, s)?;
    if direct != value {
        return Err(EnumError::IncrementalMismatch {
            subset: s,
            incremental: value.0,
            direct: direct.0,
        });
    }
    Ok(())
}

/// Calls `visitor` once per nonempty `S` with `G[S]` connected and returns
/// the number of calls.
pub fn enumerate_connected_subsets<F>(g: &Graph, mut visitor: F, cfg: &EnumConfig) -> Result<u64, EnumError>
where
    F: FnMut(VertexSubset, AllianceValue),
{
    let mut count = 0u64;
    let mut failure = None;
    for root in 0..g.order() {
        let flow = walk_root(g, root, |s, value| {
            if count >= cfg.max_subgraphs {
                failure = Some(EnumError::GuardExceeded {
                    limit: cfg.max_subgraphs,
                    visited: count,
                });
                return ControlFlow::Break(());
            }
            if cfg.check_incremental {
                if let Err(e) = verify_value(g, s, value) {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
            }
            count += 1;
            visitor(s, value);
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            break;
        }
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// Dense `(|S|, f_y)` histogram used while enumerating; merging two tallies
/// is plain addition, so workers can each keep one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    n: usize,
    width: usize,
    counts: alloc::vec::Vec<u64>,
}

impl Tally {
    pub fn new(n: usize) -> Tally {
        // f_y <= n + Δ <= 2n - 1
        let width = 2 * n;
        Tally {
            n,
            width,
            counts: alloc::vec![0; (n + 1) * width],
        }
    }

    #[inline]
    pub fn record(&mut self, s: VertexSubset, value: AllianceValue) {
        self.counts[s.len() * self.width + value.0 as usize] += 1;
    }

    pub fn merge(&mut self, other: &Tally) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += *b;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn to_poly(&self) -> BiPoly {
        BiPoly::from_terms(
            self.counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| ((i / self.width) as u32, (i % self.width) as u32, c)),
        )
    }
}

/// `da(G; x, y) = Σ x^|S| y^{f_y(S)}` over nonempty `S` with `G[S]` connected.
pub fn defensive_alliance_polynomial(g: &Graph, cfg: &EnumConfig) -> Result<BiPoly, EnumError> {
    let mut tally = Tally::new(g.order());
    enumerate_connected_subsets(g, |s, v| tally.record(s, v), cfg)?;
    Ok(tally.to_poly())
}

/// [`defensive_alliance_polynomial`] with the default guard.
pub fn da(g: &Graph) -> Result<BiPoly, EnumError> {
    defensive_alliance_polynomial(g, &EnumConfig::default())
}
