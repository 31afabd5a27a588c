//! Closed forms of `da` for the special families.
//!
//! Where a complete formula is known the fingerprint is [`FingerprintKind::Full`];
//! where only some `x^k` slices are pinned down it is
//! [`FingerprintKind::Slice`] and carries just those slices.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::bipoly::{BiPoly, UniPoly, Var};
use crate::family::{FamilyError, FamilySpec, NamedGraph};

/// Which star formula to emit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum ErrataMode {
    /// Formula that agrees with direct enumeration.
    #[default]
    Corrected,
    /// The star formula exactly as it is usually quoted, kept for diffing.
    /// It disagrees with enumeration for every star with at least two leaves.
    PaperLiteral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FingerprintKind {
    Full(BiPoly),
    /// `(k, [x^k] da)` pairs with distinct `k`, increasing.
    Slice(Vec<(u32, UniPoly)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub spec: FamilySpec,
    pub mode: ErrataMode,
    pub kind: FingerprintKind,
}

impl Fingerprint {
    pub fn is_full(&self) -> bool {
        matches!(self.kind, FingerprintKind::Full(_))
    }

    /// Whether `da` satisfies the fingerprint: equality for `Full`, every
    /// listed slice equal for `Slice`.
    pub fn matches(&self, da: &BiPoly) -> bool {
        match &self.kind {
            FingerprintKind::Full(p) => p == da,
            FingerprintKind::Slice(slices) => slices.iter().all(|(k, s)| &da.slice_x(*k) == s),
        }
    }
}

pub fn matches(fp: &Fingerprint, da: &BiPoly) -> bool {
    fp.matches(da)
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `da(K_n) = ((1 + x y^2)^n - 1) / y`; zero for `n = 0`.
pub fn complete_da(n: u32) -> BiPoly {
    let base = BiPoly::from_terms([(0u32, 0u32, 1u32), (1, 2, 1)]);
    let mut p = base.pow(n);
    p.remove_term(0, 0);
    p.shift_y(-1)
        .expect("every remaining term has y-degree at least 2")
}

fn star_corrected(n: u32) -> BiPoly {
    let mut p = BiPoly::from_terms([(1, 1, 1u32), (1, n, n)]);
    for i in 1..=n {
        p.add_term(i + 1, (2 * i + 1).min(n + 2), binomial(n, i));
    }
    p
}

fn star_literal(n: u32) -> BiPoly {
    let mut p = BiPoly::from_terms([(1, 1, 1u32), (1, n - 1, n)]);
    for i in 1..=n / 2 {
        p.add_term(i + 1, 2 * i, binomial(n, i));
    }
    for i in (n + 2) / 2..=n {
        p.add_term(i + 1, n + 1, binomial(n, i));
    }
    p
}

fn path(n: u32) -> BiPoly {
    let mut p = BiPoly::from_terms([(1, n - 1, 2u32), (1, n - 2, n - 2), (n, n + 1, 1)]);
    for i in 2..n {
        p.add_term(i, n, BigUint::from(n - i + 1));
    }
    p
}

fn cycle(n: u32) -> BiPoly {
    let mut p = BiPoly::from_terms([(1, n - 2, n), (n, n + 2, 1)]);
    for i in 2..n {
        p.add_term(i, n, BigUint::from(n));
    }
    p
}

fn complete_bipartite(n: u32, m: u32) -> BiPoly {
    let mut p = BiPoly::from_terms([(1, n, n), (1, m, m)]);
    for i in 1..=n {
        for j in 1..=m {
            let e = (n + m) as i64 + (2 * i as i64 - n as i64).min(2 * j as i64 - m as i64);
            p.add_term(i + j, e as u32, binomial(n, i) * binomial(m, j));
        }
    }
    p
}

/// `K_n` plus a vertex adjacent to `r` of its vertices (`s = n - r` are not).
fn attached(n: u32, r: u32) -> BiPoly {
    let s = n - r;
    let kr = complete_da(r);
    let ks = complete_da(s);
    let y = BiPoly::monomial(1u32, 0, 1);
    let xy = BiPoly::monomial(1u32, 1, 1);
    let one_plus_xy2 = BiPoly::from_terms([(0u32, 0u32, 1u32), (1, 2, 1)]);
    let tail = BiPoly::from_terms((1..=s).map(|j| (j, (2 * j).min(s + 1), binomial(s, j))));

    &one_plus_xy2 * &kr
        + &y * &ks
        + &(&y * &kr) * &ks
        + BiPoly::monomial(1u32, 1, n + 1 - r)
        + &(&xy * &kr) * &tail
}

fn slice(terms: &[(u32, u32)]) -> UniPoly {
    UniPoly::from_terms(Var::Y, terms.iter().map(|&(e, c)| (e, c)))
}

fn named(g: NamedGraph) -> BiPoly {
    BiPoly::from_terms(named_terms(g).iter().copied())
}

/// Coefficients `(a, b, c)` of the four comparison graphs' polynomials.
pub fn named_terms(g: NamedGraph) -> &'static [(u32, u32, u32)] {
    match g {
        NamedGraph::G1 => &[
            (8, 10, 1),
            (7, 9, 2),
            (7, 8, 6),
            (6, 9, 1),
            (6, 8, 14),
            (6, 7, 7),
            (5, 9, 2),
            (5, 8, 10),
            (5, 7, 16),
            (4, 9, 2),
            (4, 8, 4),
            (4, 7, 17),
            (3, 8, 2),
            (3, 7, 14),
            (2, 8, 1),
            (2, 7, 9),
            (1, 6, 4),
            (1, 5, 4),
        ],
        NamedGraph::G2 => &[
            (8, 10, 1),
            (7, 9, 3),
            (7, 8, 5),
            (6, 9, 1),
            (6, 8, 15),
            (6, 7, 7),
            (5, 9, 1),
            (5, 8, 11),
            (5, 7, 15),
            (4, 9, 2),
            (4, 8, 2),
            (4, 7, 19),
            (3, 8, 3),
            (3, 7, 13),
            (2, 8, 1),
            (2, 7, 9),
            (1, 6, 4),
            (1, 5, 4),
        ],
        NamedGraph::G3 => &[
            (8, 9, 1),
            (7, 9, 3),
            (7, 8, 2),
            (6, 8, 9),
            (6, 7, 1),
            (5, 9, 1),
            (5, 8, 7),
            (5, 7, 3),
            (5, 6, 1),
            (4, 9, 2),
            (4, 8, 3),
            (4, 7, 5),
            (4, 6, 2),
            (3, 9, 1),
            (3, 8, 4),
            (3, 7, 5),
            (3, 6, 1),
            (2, 8, 1),
            (2, 7, 4),
            (2, 6, 4),
            (1, 7, 2),
            (1, 6, 3),
            (1, 5, 2),
            (1, 4, 1),
        ],
        NamedGraph::G4 => &[
            (8, 9, 1),
            (7, 9, 3),
            (7, 8, 2),
            (6, 9, 2),
            (6, 8, 7),
            (6, 7, 1),
            (5, 9, 1),
            (5, 8, 7),
            (5, 7, 3),
            (5, 6, 1),
            (4, 8, 5),
            (4, 7, 5),
            (4, 6, 2),
            (3, 9, 1),
            (3, 8, 4),
            (3, 7, 5),
            (3, 6, 1),
            (2, 8, 1),
            (2, 7, 4),
            (2, 6, 4),
            (1, 7, 2),
            (1, 6, 3),
            (1, 5, 2),
            (1, 4, 1),
        ],
    }
}

/// Fingerprint of `spec`. `mode` only affects stars.
pub fn closed_form(spec: &FamilySpec, mode: ErrataMode) -> Result<Fingerprint, FamilyError> {
    spec.validate()?;
    let u = |v: usize| v as u32;
    let kind = match *spec {
        FamilySpec::Path(n) => FingerprintKind::Full(path(u(n))),
        FamilySpec::Cycle(n) => FingerprintKind::Full(cycle(u(n))),
        FamilySpec::Star(n) => FingerprintKind::Full(match mode {
            ErrataMode::Corrected => star_corrected(u(n)),
            ErrataMode::PaperLiteral => star_literal(u(n)),
        }),
        FamilySpec::Complete(n) => FingerprintKind::Full(complete_da(u(n))),
        FamilySpec::CompleteBipartite(n, m) => FingerprintKind::Full(complete_bipartite(u(n), u(m))),
        FamilySpec::Attached { n, r } => FingerprintKind::Full(attached(u(n), u(r))),
        FamilySpec::Named(g) => FingerprintKind::Full(named(g)),
        FamilySpec::DoubleStar(r, t) => {
            let (r, t) = (u(r), u(t));
            FingerprintKind::Slice(alloc::vec![
                (1, slice(&[(r + t + 1, r + t), (r + 1, 1), (t + 1, 1)])),
                (r + t + 2, slice(&[(r + t + 3, 1)])),
            ])
        }
        FamilySpec::Wheel(n) => {
            let n = u(n);
            FingerprintKind::Slice(alloc::vec![
                (1, slice(&[(n - 2, n), (1, 1)])),
                (n, slice(&[(n + 2, n + 1)])),
                (n + 1, slice(&[(n + 4, 1)])),
            ])
        }
        FamilySpec::OpenWheel(n) => {
            let n = u(n);
            FingerprintKind::Slice(alloc::vec![
                (1, slice(&[(n - 1, 2), (n - 2, n - 2), (1, 1)])),
                (n, slice(&[(n + 1, 3), (n + 2, n - 2)])),
                (n + 1, slice(&[(n + 3, 1)])),
            ])
        }
        FamilySpec::Friendship(n) => {
            let n = u(n);
            FingerprintKind::Slice(alloc::vec![(1, slice(&[(2 * n - 1, 2 * n), (1, 1)]))])
        }
        FamilySpec::TriangularBook(n) => {
            let n = u(n);
            FingerprintKind::Slice(alloc::vec![(1, slice(&[(1, 2), (n, n)]))])
        }
        FamilySpec::QuadrilateralBook(n) => {
            let n = u(n);
            FingerprintKind::Slice(alloc::vec![
                (1, slice(&[(n + 1, 2), (2 * n, 2 * n)])),
                (2, slice(&[(2 * n + 2, n), (n + 3, 2 * n + 1)])),
                (2 * n + 1, slice(&[(2 * n + 2, 2 * n + 2)])),
                (2 * n + 2, slice(&[(2 * n + 4, 1)])),
            ])
        }
    };
    Ok(Fingerprint {
        spec: *spec,
        mode,
        kind,
    })
}

/// The standard parameter sweep: path, cycle, star and complete up to 12
/// vertices; complete bipartite parts up to 6; double star arms up to 5;
/// wheel and open wheel rims up to 9; friendship up to 4 blades; books up to
/// 5 pages; attached complete graphs up to `K_9` with every `r`.
pub fn sweep_specs() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut out: Vec<FamilySpec> = Vec::new();
    out.extend((2..=12).map(Path));
    out.extend((3..=12).map(Cycle));
    out.extend((1..=12).map(Star));
    out.extend((1..=12).map(Complete));
    out.extend((1..=6).flat_map(|n| (1..=6).map(move |m| CompleteBipartite(n, m))));
    out.extend((1..=5).flat_map(|r| (1..=5).map(move |t| DoubleStar(r, t))));
    out.extend((3..=9).map(Wheel));
    out.extend((4..=9).map(OpenWheel));
    out.extend((1..=4).map(Friendship));
    out.extend((1..=5).map(TriangularBook));
    out.extend((1..=5).map(QuadrilateralBook));
    out.extend((1..=9).flat_map(|n| (0..=n).map(move |r| Attached { n, r })));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnionError {
    #[error("union of no graphs")]
    Empty,
    #[error("summand {index} is not the polynomial of a graph of order {order}")]
    NotDa { index: usize, order: usize },
    #[error("total order {0} exceeds 64")]
    TooLarge(usize),
}

/// `da(G_1 ∪ ... ∪ G_k) = (Σ da(G_i) / y^{|G_i|}) · y^{Σ |G_i|}`.
///
/// Each summand must look like a genuine `da` of its paired order:
/// `1 <= |S| <= n` and `1 <= f_y <= 2n - 1`.
pub fn union_law(das: &[(BiPoly, usize)]) -> Result<BiPoly, UnionError> {
    if das.is_empty() {
        return Err(UnionError::Empty);
    }
    let total: usize = das.iter().map(|(_, n)| n).sum();
    if total > crate::graph::MAX_ORDER {
        return Err(UnionError::TooLarge(total));
    }
    let mut out = BiPoly::zero();
    for (index, (p, n)) in das.iter().enumerate() {
        let order = *n;
        let plausible = order >= 1
            && !p.is_zero()
            && p.terms()
                .all(|(a, b, _)| (1..=order as u32).contains(&a) && (1..2 * order as u32).contains(&b));
        if !plausible {
            return Err(UnionError::NotDa { index, order });
        }
        let shifted = p
            .shift_y((total - order) as i64)
            .map_err(|_| UnionError::NotDa { index, order })?;
        out += &shifted;
    }
    Ok(out)
}
