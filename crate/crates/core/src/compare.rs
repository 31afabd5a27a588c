//! Pairwise comparison of graphs by their polynomials.

use crate::bipoly::BiPoly;
use crate::derived::{
    alliance_polynomial, induced_connected_subgraph_polynomial, strong_alliance_polynomial,
};
use crate::enumerate::{defensive_alliance_polynomial, EnumConfig, EnumError};
use crate::graph::Graph;
use crate::iso::are_isomorphic_small;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompareReport {
    pub da_equal: bool,
    /// `A(G; y)`
    pub alliance_equal: bool,
    /// `a(G; x)`; never equal across different orders.
    pub strong_alliance_equal: bool,
    /// `q(G; x)`
    pub subgraph_equal: bool,
    /// Present when both orders are within the isomorphism limit.
    pub isomorphic: Option<bool>,
}

impl CompareReport {
    /// `da_g`, `da_h` must be genuine polynomials of graphs of order `n_g`, `n_h`.
    pub fn from_polys(
        da_g: &BiPoly,
        n_g: usize,
        da_h: &BiPoly,
        n_h: usize,
        isomorphic: Option<bool>,
    ) -> CompareReport {
        let strong_alliance_equal = n_g == n_h
            && match (
                strong_alliance_polynomial(da_g, n_g),
                strong_alliance_polynomial(da_h, n_h),
            ) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
        CompareReport {
            da_equal: da_g == da_h,
            alliance_equal: alliance_polynomial(da_g) == alliance_polynomial(da_h),
            strong_alliance_equal,
            subgraph_equal: induced_connected_subgraph_polynomial(da_g)
                == induced_connected_subgraph_polynomial(da_h),
            isomorphic,
        }
    }

    /// `isomorphic ⇒ da_equal ⇒ (A, a, q all equal)`.
    pub fn is_consistent(&self) -> bool {
        let derived = self.alliance_equal && self.strong_alliance_equal && self.subgraph_equal;
        (self.isomorphic != Some(true) || self.da_equal) && (!self.da_equal || derived)
    }
}

/// Enumerates both polynomials (on the calling thread) and compares them.
pub fn compare_graphs(
    g: &Graph,
    h: &Graph,
    cfg: &EnumConfig,
    iso_limit: usize,
) -> Result<CompareReport, EnumError> {
    let da_g = defensive_alliance_polynomial(g, cfg)?;
    let da_h = defensive_alliance_polynomial(h, cfg)?;
    let iso = are_isomorphic_small(g, h, iso_limit).ok();
    Ok(CompareReport::from_polys(&da_g, g.order(), &da_h, h.order(), iso))
}
