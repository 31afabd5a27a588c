//! Corpus experiments: checking a family characterization and bucketing
//! graphs by polynomial.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use alliancepoly_core::characterize::{identify_families, CharacterizeError, Evidence};
use alliancepoly_core::compare::CompareReport;
use alliancepoly_core::derived::{alliance_polynomial, induced_connected_subgraph_polynomial};
use alliancepoly_core::graph6::encode_graph6;
use alliancepoly_core::iso::are_isomorphic_small;
use alliancepoly_core::{BiPoly, EnumConfig, EnumError, FamilyError, FamilySpec, Graph};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::engine::compute_da;
use crate::input::{Corpus, CorpusEntry, CorpusIssue};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Characterize(#[from] CharacterizeError),
}

/// Polynomial used as the bucket key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScanKey {
    #[serde(rename = "da")]
    Da,
    /// Alliance polynomial `A(y) = da(1, y)`.
    #[serde(rename = "A")]
    Alliance,
    /// Induced connected subgraph polynomial `q(x) = da(x, 1)`.
    #[serde(rename = "q")]
    Subgraph,
}

impl ScanKey {
    pub fn text(self, da: &BiPoly) -> String {
        match self {
            ScanKey::Da => da.to_canonical_text(),
            ScanKey::Alliance => alliance_polynomial(da).to_string(),
            ScanKey::Subgraph => induced_connected_subgraph_polynomial(da).to_string(),
        }
    }
}

impl FromStr for ScanKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "da" => Ok(ScanKey::Da),
            "A" => Ok(ScanKey::Alliance),
            "q" => Ok(ScanKey::Subgraph),
            _ => Err(format!("unknown key {s:?} (expected da, A or q)")),
        }
    }
}

impl fmt::Display for ScanKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanKey::Da => "da",
            ScanKey::Alliance => "A",
            ScanKey::Subgraph => "q",
        })
    }
}

/// Entry index paired with its `da`.
type Indexed = Vec<(usize, BiPoly)>;

/// `da` of every entry; guard overruns become issues.
fn polynomials(
    entries: &[CorpusEntry],
    cfg: &EnumConfig,
) -> Result<(Indexed, Vec<CorpusIssue>), CorpusError> {
    let serial = EnumConfig {
        parallel: false,
        ..*cfg
    };
    let results: Vec<_> = entries
        .par_iter()
        .map(|e| compute_da(&e.graph, &serial))
        .collect();
    let mut polys = Vec::new();
    let mut issues = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(p) => polys.push((i, p)),
            Err(e @ EnumError::GuardExceeded { .. }) => issues.push(CorpusIssue {
                id: entries[i].id.clone(),
                message: e.to_string(),
            }),
            Err(e) => return Err(e.into()),
        }
    }
    Ok((polys, issues))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchDoc {
    pub spec: String,
    pub evidence: &'static str,
}

pub fn evidence_name(e: Evidence) -> &'static str {
    match e {
        Evidence::FullEquality => "full",
        Evidence::SliceConfirmed => "slice+enumeration",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusHit {
    pub id: String,
    pub graph6: String,
    /// `None` when the order is above the isomorphism limit.
    pub isomorphic: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub query: String,
    pub matches: Vec<MatchDoc>,
    pub corpus_hits: Vec<CorpusHit>,
    /// Every hit is isomorphic to the family instance.
    pub holds: bool,
    pub errors: Vec<CorpusIssue>,
}

/// Finds every corpus graph with the same `da` as the instance of `spec`
/// and checks each one for isomorphism with it.
pub fn verify_characterization(
    spec: &FamilySpec,
    corpus: &Corpus,
    cfg: &EnumConfig,
    iso_limit: usize,
) -> Result<CharacterizationReport, CorpusError> {
    let family = spec.graph()?;
    let target = compute_da(&family, cfg)?;
    let matches = identify_families(&target, cfg)?
        .into_iter()
        .map(|m| MatchDoc {
            spec: m.spec.to_string(),
            evidence: evidence_name(m.evidence),
        })
        .collect();
    let (polys, mut errors) = polynomials(&corpus.entries, cfg)?;
    let corpus_hits: Vec<CorpusHit> = polys
        .into_iter()
        .filter(|(_, p)| *p == target)
        .map(|(i, _)| {
            let e = &corpus.entries[i];
            CorpusHit {
                id: e.id.clone(),
                graph6: encode_graph6(&e.graph).unwrap_or_default(),
                isomorphic: are_isomorphic_small(&e.graph, &family, iso_limit).ok(),
            }
        })
        .collect();
    let holds = corpus_hits.iter().all(|h| h.isomorphic == Some(true));
    errors.splice(0..0, corpus.issues.iter().cloned());
    Ok(CharacterizationReport {
        query: spec.to_string(),
        matches,
        corpus_hits,
        holds,
        errors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bucket {
    pub key: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPair {
    pub a: String,
    pub b: String,
    pub key_equal: bool,
    pub da_equal: bool,
    pub isomorphic: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub key: ScanKey,
    pub graphs: usize,
    /// Ordered by key text.
    pub buckets: Vec<Bucket>,
    /// Every pair inside a bucket with at least two members, in bucket order.
    pub split_pairs: Vec<SplitPair>,
    pub skipped: Vec<CorpusIssue>,
}

impl ScanReport {
    /// Pairs sharing the key but separated by `da`.
    pub fn distinguished(&self) -> impl Iterator<Item = &SplitPair> {
        self.split_pairs.iter().filter(|p| !p.da_equal)
    }

    /// Pairs sharing the key that are not isomorphic (or not checked).
    pub fn unresolved(&self) -> impl Iterator<Item = &SplitPair> {
        self.split_pairs.iter().filter(|p| p.isomorphic != Some(true))
    }

    /// Plain-text summary: counts, then one row per shared bucket pair.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let shared = self.buckets.iter().filter(|b| b.members.len() > 1).count();
        let _ = writeln!(s, "key: {}", self.key);
        let _ = writeln!(s, "graphs: {}", self.graphs);
        let _ = writeln!(s, "skipped: {}", self.skipped.len());
        let _ = writeln!(s, "buckets: {} ({} shared)", self.buckets.len(), shared);
        let _ = writeln!(s, "pairs: {}", self.split_pairs.len());
        let _ = writeln!(s, "pairs split by da: {}", self.distinguished().count());
        if !self.split_pairs.is_empty() {
            let wa = self
                .split_pairs
                .iter()
                .map(|p| p.a.len())
                .max()
                .unwrap_or(1)
                .max(1);
            let wb = self
                .split_pairs
                .iter()
                .map(|p| p.b.len())
                .max()
                .unwrap_or(1)
                .max(1);
            let _ = writeln!(s, "{:<wa$}  {:<wb$}  da_equal  isomorphic", "a", "b");
            for p in &self.split_pairs {
                let iso = match p.isomorphic {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "-",
                };
                let da = if p.da_equal { "yes" } else { "no" };
                let _ = writeln!(s, "{:<wa$}  {:<wb$}  {da:<8}  {iso}", p.a, p.b);
            }
        }
        for issue in &self.skipped {
            let _ = writeln!(s, "skipped {}: {}", issue.id, issue.message);
        }
        s
    }
}

/// Buckets the corpus by the chosen polynomial and compares every pair that
/// shares a bucket.
pub fn scan_corpus(
    corpus: &Corpus,
    key: ScanKey,
    cfg: &EnumConfig,
    iso_limit: usize,
) -> Result<ScanReport, CorpusError> {
    let (polys, mut skipped) = polynomials(&corpus.entries, cfg)?;
    let mut groups: BTreeMap<String, Vec<(usize, &BiPoly)>> = BTreeMap::new();
    for (i, p) in &polys {
        groups.entry(key.text(p)).or_default().push((*i, p));
    }
    let mut pairs: Vec<(&Graph, &BiPoly, usize, &Graph, &BiPoly, usize)> = Vec::new();
    for members in groups.values() {
        for (x, &(i, p)) in members.iter().enumerate() {
            for &(j, q) in &members[x + 1..] {
                let (g, h) = (&corpus.entries[i].graph, &corpus.entries[j].graph);
                pairs.push((g, p, i, h, q, j));
            }
        }
    }
    let split_pairs = pairs
        .par_iter()
        .map(|&(g, p, i, h, q, j)| {
            let iso = are_isomorphic_small(g, h, iso_limit).ok();
            let r = CompareReport::from_polys(p, g.order(), q, h.order(), iso);
            SplitPair {
                a: corpus.entries[i].id.clone(),
                b: corpus.entries[j].id.clone(),
                key_equal: true,
                da_equal: r.da_equal,
                isomorphic: r.isomorphic,
            }
        })
        .collect();
    let buckets = groups
        .into_iter()
        .map(|(key, members)| Bucket {
            key,
            members: members
                .iter()
                .map(|&(i, _)| corpus.entries[i].id.clone())
                .collect(),
        })
        .collect();
    skipped.splice(0..0, corpus.issues.iter().cloned());
    Ok(ScanReport {
        key,
        graphs: corpus.entries.len(),
        buckets,
        split_pairs,
        skipped,
    })
}
