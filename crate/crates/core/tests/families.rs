mod common;

use alliancepoly_core::characterize::{identify_families, Evidence};
use alliancepoly_core::closed_forms::{closed_form, sweep_specs, union_law, ErrataMode};
use alliancepoly_core::derived::{alliance_polynomial, induced_connected_subgraph_polynomial};
use alliancepoly_core::enumerate::da;
use alliancepoly_core::gen::nonisomorphic_graphs;
use alliancepoly_core::iso::are_isomorphic_small;
use alliancepoly_core::props::{cut_vertex_count, size_of, triangle_census};
use alliancepoly_core::{BiPoly, EnumConfig, FamilySpec, NamedGraph, UniPoly, Var};
use common::{parse_sum, random_graph, A_G12, A_G34, DA_G1, DA_G2, DA_G3, DA_G4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn printed(text: &str) -> BiPoly {
    BiPoly::from_terms(parse_sum(text))
}

fn printed_alliance(text: &str) -> UniPoly {
    UniPoly::from_terms(Var::Y, parse_sum(text).into_iter().map(|(_, b, c)| (b, c)))
}

#[test]
fn printed_pairs_match_enumeration() {
    let cases = [
        (NamedGraph::G1, DA_G1, A_G12, 18),
        (NamedGraph::G2, DA_G2, A_G12, 18),
        (NamedGraph::G3, DA_G3, A_G34, 24),
        (NamedGraph::G4, DA_G4, A_G34, 24),
    ];
    for (g, poly, alliance, terms) in cases {
        let p = da(&g.graph()).unwrap();
        assert_eq!(p.len(), terms);
        assert_eq!(p, printed(poly), "{}", g.name());
        assert_eq!(alliance_polynomial(&p), printed_alliance(alliance));
    }
    let d = |g: NamedGraph| da(&g.graph()).unwrap();
    assert_ne!(d(NamedGraph::G1), d(NamedGraph::G2));
    assert_ne!(d(NamedGraph::G3), d(NamedGraph::G4));
    assert_eq!(d(NamedGraph::G1).coeff(6, 8), 14u32.into());
    assert_eq!(d(NamedGraph::G2).coeff(6, 8), 15u32.into());
    let q1 = induced_connected_subgraph_polynomial(&d(NamedGraph::G1));
    let q2 = induced_connected_subgraph_polynomial(&d(NamedGraph::G2));
    assert_eq!((q1.coeff(6), q2.coeff(6)), (22u32.into(), 23u32.into()));
}

#[test]
fn printed_polynomial_anchors() {
    let g3 = printed(DA_G3);
    assert_eq!(cut_vertex_count(&g3), Ok(3));
    assert_eq!(triangle_census(&g3), Ok((11, 15, 2)));
    assert_eq!(size_of(&printed(DA_G1)), Ok(10));
}

#[test]
fn sweep_matches_corrected_forms() {
    let specs = sweep_specs();
    assert_eq!(specs.len(), 187);
    for spec in specs {
        let fp = closed_form(&spec, ErrataMode::Corrected).unwrap();
        let p = da(&spec.graph().unwrap()).unwrap();
        assert!(fp.matches(&p), "{spec}");
    }
}

#[test]
fn literal_star_form_never_matches() {
    for n in 1..=8 {
        let spec = FamilySpec::Star(n);
        let p = da(&spec.graph().unwrap()).unwrap();
        let literal = closed_form(&spec, ErrataMode::PaperLiteral).unwrap();
        let corrected = closed_form(&spec, ErrataMode::Corrected).unwrap();
        assert!(corrected.matches(&p), "{spec}");
        // at n = 1 the literal form has an x*y^0 term
        assert!(!literal.matches(&p), "{spec}");
    }
}

#[test]
fn union_law_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..20 {
        let parts: Vec<_> = (0..rng.gen_range(2..=3))
            .map(|_| {
                let n = rng.gen_range(1..=6);
                random_graph(&mut rng, n, 0.5)
            })
            .collect();
        let mut union = parts[0].clone();
        for h in &parts[1..] {
            union = union.disjoint_union(h).unwrap();
        }
        let summands: Vec<_> = parts.iter().map(|h| (da(h).unwrap(), h.order())).collect();
        assert_eq!(union_law(&summands).unwrap(), da(&union).unwrap());
    }
}

fn canonical(spec: FamilySpec) -> FamilySpec {
    match spec {
        FamilySpec::DoubleStar(r, t) if r > t => FamilySpec::DoubleStar(t, r),
        FamilySpec::CompleteBipartite(n, m) if n > m => FamilySpec::CompleteBipartite(m, n),
        s => s,
    }
}

#[test]
fn identification_is_complete_and_sound_over_the_sweep() {
    let cfg = EnumConfig::default();
    for spec in sweep_specs() {
        let p = da(&spec.graph().unwrap()).unwrap();
        let found = identify_families(&p, &cfg).unwrap();
        assert!(found.iter().any(|m| m.spec == canonical(spec)), "{spec}");
        for m in found {
            assert_eq!(da(&m.spec.graph().unwrap()).unwrap(), p, "{spec} vs {}", m.spec);
            let full = closed_form(&m.spec, ErrataMode::Corrected).unwrap().is_full();
            let want = if full {
                Evidence::FullEquality
            } else {
                Evidence::SliceConfirmed
            };
            assert_eq!(m.evidence, want);
        }
    }
}

#[test]
fn identification_has_no_false_positives_up_to_order_six() {
    let cfg = EnumConfig::default();
    for n in 1..=6 {
        for g in nonisomorphic_graphs(n) {
            for m in identify_families(&da(&g).unwrap(), &cfg).unwrap() {
                let h = m.spec.graph().unwrap();
                assert_eq!(
                    are_isomorphic_small(&g, &h, 10),
                    Ok(true),
                    "{:?} vs {}",
                    g,
                    m.spec
                );
            }
        }
    }
}

#[test]
fn family_polynomials_are_unique_within_their_order() {
    for n in 1..=6 {
        let corpus: Vec<_> = nonisomorphic_graphs(n)
            .into_iter()
            .map(|g| (da(&g).unwrap(), g))
            .collect();
        for spec in sweep_specs().into_iter().filter(|s| s.order() == n) {
            let f = spec.graph().unwrap();
            let target = da(&f).unwrap();
            let hits: Vec<_> = corpus.iter().filter(|(p, _)| *p == target).collect();
            assert_eq!(hits.len(), 1, "{spec}");
            assert_eq!(are_isomorphic_small(&hits[0].1, &f, 10), Ok(true));
        }
    }
}

#[test]
fn spec_examples() {
    let cfg = EnumConfig::default();
    let names = |s: &str| -> Vec<String> {
        let spec: FamilySpec = s.parse().unwrap();
        identify_families(&da(&spec.graph().unwrap()).unwrap(), &cfg)
            .unwrap()
            .iter()
            .map(|m| m.spec.to_string())
            .collect()
    };
    let c4 = names("cycle:4");
    assert!(c4.contains(&"cycle:4".into()) && c4.contains(&"complete_bipartite:2,2".into()));
    assert!(names("path:4").contains(&"path:4".into()));
    let k3 = names("complete:3");
    for s in ["complete:3", "cycle:3", "triangular_book:1", "friendship:1"] {
        assert!(k3.contains(&s.to_string()), "{s}");
    }
    // C4 polynomial from both closed forms
    let want = printed("4xy^{2} + 4x^{2}y^{4} + 4x^{3}y^{4} + x^{4}y^{6}");
    assert_eq!(
        da(&"cycle:4".parse::<FamilySpec>().unwrap().graph().unwrap()).unwrap(),
        want
    );
    // only S3 among graphs of order 4
    let s3 = da(&FamilySpec::Star(3).graph().unwrap()).unwrap();
    let hits = nonisomorphic_graphs(4)
        .into_iter()
        .filter(|g| da(g).unwrap() == s3)
        .count();
    assert_eq!(hits, 1);
}
