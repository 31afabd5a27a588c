//! Family identification from a `da` polynomial.

use alloc::vec::Vec;

use thiserror::Error;

use crate::bipoly::BiPoly;
use crate::closed_forms::{closed_form, ErrataMode};
use crate::enumerate::{defensive_alliance_polynomial, EnumConfig, EnumError};
use crate::family::{FamilyError, FamilySpec, NamedGraph};
use crate::graph::MAX_ORDER;
use crate::props::{degree_sequence_of, order_of, size_of, PropsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Evidence {
    /// Equal to the family's complete closed form.
    FullEquality,
    /// The slices match and the enumerated instance is equal.
    SliceConfirmed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyMatch {
    pub spec: FamilySpec,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizeError {
    #[error("not a valid polynomial: {0}")]
    Invalid(#[from] PropsError),
    #[error("degree sum {degree_sum} is not twice the size {size}")]
    DegreeSum { degree_sum: u64, size: u64 },
    #[error("order {0} exceeds 64")]
    TooLarge(u64),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Every family instance with `n` vertices.
pub fn candidate_specs(n: usize) -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    out.push(Complete(n));
    if n >= 2 {
        out.push(Path(n));
        out.push(Star(n - 1));
        out.extend((0..n).map(|r| Attached { n: n - 1, r }));
        out.extend((1..=n / 2).map(|a| CompleteBipartite(a, n - a)));
    }
    if n >= 3 {
        out.push(Cycle(n));
        out.push(TriangularBook(n - 2));
        if n % 2 == 1 {
            out.push(Friendship((n - 1) / 2));
        }
    }
    if n >= 4 {
        out.push(Wheel(n - 1));
        out.extend((1..=(n - 2) / 2).map(|r| DoubleStar(r, n - 2 - r)));
        if n.is_multiple_of(2) {
            out.push(QuadrilateralBook((n - 2) / 2));
        }
    }
    if n >= 5 {
        out.push(OpenWheel(n - 1));
    }
    if n == 8 {
        out.extend(NamedGraph::ALL.iter().map(|&g| Named(g)));
    }
    out
}

/// Cheap consistency checks a genuine `da` must pass.
fn validate(da: &BiPoly) -> Result<usize, CharacterizeError> {
    let n = order_of(da)?;
    let degrees = degree_sequence_of(da)?;
    let size = size_of(da)?;
    let degree_sum: u64 = degrees.iter().sum();
    if degree_sum != 2 * size {
        return Err(CharacterizeError::DegreeSum { degree_sum, size });
    }
    if n > MAX_ORDER as u64 {
        return Err(CharacterizeError::TooLarge(n));
    }
    Ok(n as usize)
}

/// All families whose member of the matching order has polynomial `da`,
/// sorted by tag and then parameters. Slice-only fingerprints are confirmed
/// by enumerating the generated instance under `cfg`.
pub fn identify_families(da: &BiPoly, cfg: &EnumConfig) -> Result<Vec<FamilyMatch>, CharacterizeError> {
    let n = validate(da)?;
    let mut out = Vec::new();
    for spec in candidate_specs(n) {
        let fp = closed_form(&spec, ErrataMode::Corrected)?;
        if !fp.matches(da) {
            continue;
        }
        let evidence = if fp.is_full() {
            Evidence::FullEquality
        } else if defensive_alliance_polynomial(&spec.graph()?, cfg)? == *da {
            Evidence::SliceConfirmed
        } else {
            continue;
        };
        out.push(FamilyMatch { spec, evidence });
    }
    out.sort_by(|a, b| (a.spec.tag(), a.spec).cmp(&(b.spec.tag(), b.spec)));
    Ok(out)
}
