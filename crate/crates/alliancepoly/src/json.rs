//! JSON forms of polynomials and property profiles.
//!
//! A bivariate polynomial is
//! `{"n": <order, optional>, "terms": [{"x": a, "y": b, "c": "<decimal>"}, ...]}`
//! with terms sorted by `x`, then `y`. Coefficients are decimal strings so no
//! consumer has to squeeze them into a double.

use std::str::FromStr;

use alliancepoly_core::bipoly::{BiPoly, UniPoly};
use alliancepoly_core::props::PropertyProfile;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed polynomial JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("coefficient {0:?} is not a positive decimal integer")]
    Coefficient(String),
    #[error("term x^{x}y^{y} appears more than once")]
    Duplicate { x: u32, y: u32 },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    terms: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    x: u32,
    y: u32,
    c: String,
}

fn coefficient(c: &str) -> Result<BigUint, JsonError> {
    let bad = || JsonError::Coefficient(c.to_string());
    if c.is_empty() || !c.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let v = BigUint::from_str(c).map_err(|_| bad())?;
    if v == BigUint::ZERO {
        return Err(bad());
    }
    Ok(v)
}

pub fn bipoly_to_value(p: &BiPoly, n: Option<usize>) -> Value {
    let doc = PolyDoc {
        n,
        terms: p
            .terms()
            .map(|(x, y, c)| TermDoc {
                x,
                y,
                c: c.to_string(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data")
}

pub fn bipoly_to_json(p: &BiPoly, n: Option<usize>) -> String {
    bipoly_to_value(p, n).to_string()
}

/// Inverse of [`bipoly_to_json`]. Zero, negative or non-decimal coefficients
/// and repeated monomials are rejected.
pub fn bipoly_from_json(text: &str) -> Result<(BiPoly, Option<usize>), JsonError> {
    let doc: PolyDoc = serde_json::from_str(text)?;
    let mut p = BiPoly::zero();
    for t in doc.terms {
        let c = coefficient(&t.c)?;
        if p.coeff(t.x, t.y) != BigUint::ZERO {
            return Err(JsonError::Duplicate { x: t.x, y: t.y });
        }
        p.add_term(t.x, t.y, c);
    }
    Ok((p, doc.n))
}

/// `{"var": "x"|"y", "terms": [{"e": k, "c": "<decimal>"}, ...]}`
pub fn unipoly_to_value(p: &UniPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({"e": e, "c": c.to_string()}))
        .collect();
    json!({"var": p.var().letter().to_string(), "terms": terms})
}

#[derive(Serialize)]
struct ProfileDoc<'a> {
    order: u64,
    size: u64,
    connected: bool,
    degrees: &'a [u64],
    cut_vertices: Option<u64>,
    max_component: MaxComponent,
    regular: Option<u64>,
    k3: u64,
    s32: u64,
    s33: u64,
}

#[derive(Serialize)]
struct MaxComponent {
    order: u64,
    count: u64,
}

pub fn profile_to_value(p: &PropertyProfile) -> Value {
    serde_json::to_value(ProfileDoc {
        order: p.order,
        size: p.size,
        connected: p.connected,
        degrees: &p.degrees,
        cut_vertices: p.cut_vertices,
        max_component: MaxComponent {
            order: p.max_component.0,
            count: p.max_component.1,
        },
        regular: p.regular,
        k3: p.k3,
        s32: p.s32,
        s33: p.s33,
    })
    .expect("plain data")
}
