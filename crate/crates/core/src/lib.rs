//! Defensive alliance polynomial `da(G; x, y)` of small simple graphs.
//!
//! For a graph `G` of order `n` and a nonempty vertex set `S` inducing a
//! connected subgraph, `S` contributes the monomial `x^|S| y^f(S)` where
//!
//! ```text
//! f(S) = min over u in S of ( deg_S(u) - deg_out(u) + n )
//! ```
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! - [`graph`], [`subset`], [`graph6`], [`family`]: graphs on at most 64
//!   vertices, the special families and the four named comparison graphs.
//! - [`bipoly`]: exact sparse polynomials with big-integer coefficients.
//! - [`enumerate`]: connected induced subset enumeration and `da` itself.
//! - [`derived`]: the alliance, strong alliance and induced connected
//!   subgraph polynomials obtained from `da`.
//! - [`closed_forms`], [`props`], [`characterize`]: closed forms per family,
//!   invariants read off a polynomial, and family identification.
//! - [`iso`], [`compare`], [`gen`]: isomorphism for small graphs, pairwise
//!   comparison and exhaustive small-graph generation.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bipoly;
pub mod characterize;
pub mod closed_forms;
pub mod compare;
pub mod derived;
pub mod enumerate;
pub mod family;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod props;
pub mod subset;

pub use bipoly::{BiPoly, PolyError, UniPoly, Var};
pub use enumerate::{
    alliance_value, defensive_alliance_polynomial, enumerate_connected_subsets, AllianceValue, EnumConfig,
    EnumError,
};
pub use family::{FamilyError, FamilySpec, NamedGraph};
pub use graph::{Graph, GraphError, MAX_ORDER};
pub use subset::VertexSubset;
