//! Graph invariants read off a `da` polynomial, without the graph.
//!
//! Every extractor takes only the polynomial, so the same functions
//! validate polynomials that did not come from this crate's enumerator.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::bipoly::BiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropsError {
    #[error("the x^1 slice is empty; not the polynomial of a nonempty graph")]
    NoSingletons,
    #[error("x^1 term y^{exponent} implies an impossible degree for order {order}")]
    ImpossibleDegree { exponent: u32, order: u64 },
    #[error("singleton terms sum to {found} but the order is {order}")]
    SingletonCount { found: u64, order: u64 },
    #[error("cut vertices are only defined here for connected graphs")]
    Disconnected,
    #[error("the x^1 slice is not a single monomial, so the graph is not regular")]
    NotRegular,
    #[error("S32 = {s32} and k3 = {k3} do not give a nonnegative even difference")]
    TriangleParity { s32: u64, k3: u64 },
    #[error("coefficient does not fit in 64 bits")]
    Overflow,
}

fn small(c: &BigUint) -> Result<u64, PropsError> {
    c.to_u64().ok_or(PropsError::Overflow)
}

fn slice_sum(da: &BiPoly, k: u32) -> Result<u64, PropsError> {
    small(&da.slice_x(k).coefficient_sum())
}

/// `n = [x^1] da(G; x, 1)`.
pub fn order_of(da: &BiPoly) -> Result<u64, PropsError> {
    match slice_sum(da, 1)? {
        0 => Err(PropsError::NoSingletons),
        n => Ok(n),
    }
}

/// `m = [x^2] da(G; x, 1)`.
pub fn size_of(da: &BiPoly) -> Result<u64, PropsError> {
    slice_sum(da, 2)
}

/// Number of connected induced subgraphs of order `k`.
pub fn connected_k_subset_count(da: &BiPoly, k: u32) -> Result<u64, PropsError> {
    slice_sum(da, k)
}

/// `G` is connected iff `deg_x da = n`.
pub fn is_connected_poly(da: &BiPoly) -> Result<bool, PropsError> {
    let n = order_of(da)?;
    let top = da.x_degree().map_err(|_| PropsError::NoSingletons)?;
    Ok(u64::from(top) == n)
}

/// Degree multiset, non-increasing: each `c·x·y^b` gives `c` vertices of
/// degree `n - b`.
pub fn degree_sequence_of(da: &BiPoly) -> Result<Vec<u64>, PropsError> {
    let n = order_of(da)?;
    let mut out = Vec::with_capacity(n as usize);
    for (b, c) in da.slice_x(1).terms() {
        if b < 1 || u64::from(b) > n {
            return Err(PropsError::ImpossibleDegree {
                exponent: b,
                order: n,
            });
        }
        let c = small(c)?;
        out.extend(core::iter::repeat_n(n - u64::from(b), c as usize));
    }
    Ok(out)
}

/// `n - [x^{n-1}] da(G; x, 1)` for connected `G`.
pub fn cut_vertex_count(da: &BiPoly) -> Result<u64, PropsError> {
    if !is_connected_poly(da)? {
        return Err(PropsError::Disconnected);
    }
    let n = order_of(da)?;
    if n == 1 {
        // K1: deleting the vertex leaves no components.
        return Ok(0);
    }
    let kept = slice_sum(da, (n - 1) as u32)?;
    Ok(n.saturating_sub(kept))
}

/// `(c, count)`: largest component order and how many components have it.
pub fn max_component(da: &BiPoly) -> Result<(u64, u64), PropsError> {
    order_of(da)?;
    let q = da.substitute_y_one();
    let c = q.degree().ok_or(PropsError::NoSingletons)?;
    Ok((u64::from(c), small(&q.coeff(c))?))
}

/// `Some(Δ)` iff the `x^1` slice is the single monomial `n·y^{n-Δ}`.
pub fn regular_degree(da: &BiPoly) -> Result<Option<u64>, PropsError> {
    let n = order_of(da)?;
    let slice = da.slice_x(1);
    if slice.len() != 1 {
        return Ok(None);
    }
    let (b, _) = slice.terms().next().expect("one term");
    if b < 1 || u64::from(b) > n {
        return Err(PropsError::ImpossibleDegree {
            exponent: b,
            order: n,
        });
    }
    Ok(Some(n - u64::from(b)))
}

/// Components of order `k` in a Δ-regular graph: `[x^k y^{Δ+n}] da`.
pub fn regular_component_count(da: &BiPoly, k: u32) -> Result<u64, PropsError> {
    let delta = regular_degree(da)?.ok_or(PropsError::NotRegular)?;
    let n = order_of(da)?;
    small(&da.coeff(k, (delta + n) as u32))
}

/// `(k3, S32, S33)`: connected induced 3-sets, paths of length two
/// (`Σ_v C(deg v, 2)`), and triangles, related by `k3 = S32 - 2 S33`.
pub fn triangle_census(da: &BiPoly) -> Result<(u64, u64, u64), PropsError> {
    let s32: u64 = degree_sequence_of(da)?
        .iter()
        .map(|&d| d * d.saturating_sub(1) / 2)
        .sum();
    let k3 = connected_k_subset_count(da, 3)?;
    if k3 > s32 || !(s32 - k3).is_multiple_of(2) {
        return Err(PropsError::TriangleParity { s32, k3 });
    }
    Ok((k3, s32, (s32 - k3) / 2))
}

/// Everything the polynomial tells about its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyProfile {
    pub order: u64,
    pub size: u64,
    pub connected: bool,
    pub degrees: Vec<u64>,
    /// `None` for disconnected graphs.
    pub cut_vertices: Option<u64>,
    pub max_component: (u64, u64),
    pub regular: Option<u64>,
    pub k3: u64,
    pub s32: u64,
    pub s33: u64,
}

pub fn profile(da: &BiPoly) -> Result<PropertyProfile, PropsError> {
    let order = order_of(da)?;
    let degrees = degree_sequence_of(da)?;
    let found: u64 = degrees.len() as u64;
    if found != order {
        return Err(PropsError::SingletonCount { found, order });
    }
    let connected = is_connected_poly(da)?;
    let (k3, s32, s33) = triangle_census(da)?;
    Ok(PropertyProfile {
        order,
        size: size_of(da)?,
        connected,
        cut_vertices: if connected {
            Some(cut_vertex_count(da)?)
        } else {
            None
        },
        max_component: max_component(da)?,
        regular: regular_degree(da)?,
        degrees,
        k3,
        s32,
        s33,
    })
}
