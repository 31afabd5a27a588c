//! Edge-list files and graph corpora.
//!
//! An edge list is a header line `n m` followed by `m` lines `u v`
//! (0-indexed). Text after `#` is ignored, as are blank lines.
//!
//! A corpus is either a graph6 file (one graph per line, optional
//! `>>graph6<<` prefix) or a directory of edge-list files.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use alliancepoly_core::graph6::{parse_graph6, Graph6Error};
use alliancepoly_core::{Graph, GraphError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> InputError + '_ {
    move |source| InputError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let err = |line: usize, message: String| InputError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let pair = |line: usize, l: &str| -> Result<(usize, usize), InputError> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(err(line, format!("expected two integers, found {l:?}")));
        };
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line, format!("{s:?} is not a nonnegative integer")))
        };
        Ok((num(a)?, num(b)?))
    };
    let Some((line, header)) = lines.next() else {
        return Err(err(1, "missing \"n m\" header".into()));
    };
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(err(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.size() != m {
        return Err(err(0, "repeated edge".into()));
    }
    Ok(g)
}

pub fn read_edge_list(path: &Path) -> Result<Graph, InputError> {
    let text = fs::read_to_string(path).map_err(io_error(path))?;
    parse_edge_list(&text)
}

/// One corpus graph with a stable identifier: `line:graph6` for graph6
/// corpora, the file name for edge-list directories.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
}

/// A corpus item that could not be used, with the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusIssue {
    pub id: String,
    pub message: String,
}

#[derive(Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub issues: Vec<CorpusIssue>,
}

/// Parses graph6 lines; bad lines become issues and are skipped.
pub fn parse_graph6_corpus(text: &str) -> Corpus {
    let mut corpus = Corpus::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let id = format!("{}:{line}", i + 1);
        match parse_graph6(line) {
            Ok(graph) => corpus.entries.push(CorpusEntry { id, graph }),
            Err(e) => corpus.issues.push(CorpusIssue {
                id,
                message: e.to_string(),
            }),
        }
    }
    corpus
}

/// Reads a graph6 file or a directory of edge-list files (sorted by name).
pub fn read_corpus(path: &Path) -> Result<Corpus, InputError> {
    if !path.is_dir() {
        let text = fs::read_to_string(path).map_err(io_error(path))?;
        return Ok(parse_graph6_corpus(&text));
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(io_error(path))?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io_error(path))?;
    files.retain(|p| p.is_file());
    files.sort();
    let mut corpus = Corpus::default();
    for file in files {
        let id = file
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match read_edge_list(&file) {
            Ok(graph) => corpus.entries.push(CorpusEntry { id, graph }),
            Err(e) => corpus.issues.push(CorpusIssue {
                id,
                message: e.to_string(),
            }),
        }
    }
    Ok(corpus)
}
