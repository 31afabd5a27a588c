//! Polynomials obtained from `da` by substitution or slicing.

use thiserror::Error;

use crate::bipoly::{BiPoly, UniPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("order {given} does not match the order {actual:?} read from the polynomial")]
pub struct OrderMismatch {
    pub given: usize,
    pub actual: Option<u64>,
}

/// Alliance polynomial `A(G; y) = da(G; 1, y)`.
pub fn alliance_polynomial(da: &BiPoly) -> UniPoly {
    da.substitute_x_one()
}

/// Strong alliance polynomial `a(G; x) = Σ_{k=0}^{n-1} [y^{n+k}] da`, the
/// connected strong defensive alliances counted by size.
pub fn strong_alliance_polynomial(da: &BiPoly, n: usize) -> Result<UniPoly, OrderMismatch> {
    let actual = crate::props::order_of(da).ok();
    if actual != Some(n as u64) {
        return Err(OrderMismatch { given: n, actual });
    }
    let n = n as u32;
    let mut out = UniPoly::zero(Var::X);
    for (a, b, c) in da.terms() {
        if (n..2 * n).contains(&b) {
            out.add_term(a, c.clone());
        }
    }
    Ok(out)
}

/// Induced connected subgraph polynomial `q(G; x) = da(G; x, 1)`.
pub fn induced_connected_subgraph_polynomial(da: &BiPoly) -> UniPoly {
    da.substitute_y_one()
}
