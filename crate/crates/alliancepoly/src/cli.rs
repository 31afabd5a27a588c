//! Command-line front end. [`run`] does all the work and returns the exit
//! code, so the binary is a one-liner and tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 domain error, 2 bad input, 3 enumeration guard
//! exceeded, 4 internal invariant breach.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use alliancepoly_core::characterize::{identify_families, CharacterizeError};
use alliancepoly_core::closed_forms::{closed_form, ErrataMode, FingerprintKind};
use alliancepoly_core::compare::CompareReport;
use alliancepoly_core::derived::{
    alliance_polynomial, induced_connected_subgraph_polynomial, strong_alliance_polynomial,
};
use alliancepoly_core::enumerate::DEFAULT_MAX_SUBGRAPHS;
use alliancepoly_core::graph6::parse_graph6;
use alliancepoly_core::iso::{are_isomorphic_small, DEFAULT_ISO_LIMIT};
use alliancepoly_core::props::{order_of, profile, regular_degree, PropertyProfile, PropsError};
use alliancepoly_core::{BiPoly, EnumConfig, EnumError, FamilySpec, Graph, NamedGraph};
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus::{evidence_name, scan_corpus, verify_characterization, CorpusError, ScanKey};
use crate::engine::compute_da;
use crate::input::{read_corpus, read_edge_list, InputError};
use crate::json::{bipoly_from_json, bipoly_to_value, profile_to_value, unipoly_to_value};

/// Environment variable consulted when `--guard` is absent.
pub const GUARD_ENV: &str = "ALLIANCEPOLY_GUARD";

#[derive(Debug, Parser)]
#[command(
    name = "alliancepoly",
    version,
    about = "Defensive alliance polynomials of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of connected sets to visit per graph
    /// (default: $ALLIANCEPOLY_GUARD, else 50000000).
    #[arg(long, global = true)]
    guard: Option<u64>,
    /// Enumerate on all cores.
    #[arg(long, global = true)]
    parallel: bool,
    /// Largest order for which isomorphism is decided.
    #[arg(long, global = true, default_value_t = DEFAULT_ISO_LIMIT)]
    iso_limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "da")]
    Da,
    /// alliance polynomial da(1, y)
    #[value(name = "A")]
    Alliance,
    /// strong alliance polynomial
    #[value(name = "a")]
    Strong,
    /// induced connected subgraph polynomial da(x, 1)
    #[value(name = "q")]
    Subgraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Errata {
    Corrected,
    Paper,
}

#[derive(Debug, Args)]
struct Inputs {
    /// Family instance, e.g. path:4, complete_bipartite:3,4, attached:5,2.
    #[arg(long)]
    family: Vec<String>,
    /// Named graph G1..G4.
    #[arg(long)]
    named: Vec<String>,
    /// Edge-list file: "n m" header then m lines "u v".
    #[arg(long)]
    edges: Vec<PathBuf>,
    /// graph6 string.
    #[arg(long)]
    g6: Vec<String>,
    /// Polynomial JSON file.
    #[arg(long)]
    poly: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print da or one of the polynomials derived from it.
    Poly {
        #[command(flatten)]
        input: Inputs,
        #[arg(long, value_enum, default_value_t = Which::Da)]
        which: Which,
    },
    /// Graph properties read off da.
    Props {
        #[command(flatten)]
        input: Inputs,
    },
    /// Families whose polynomial equals the input's da.
    Identify {
        #[command(flatten)]
        input: Inputs,
        /// Also check the characterization against a corpus (graph6 file or
        /// directory of edge lists). Needs --family or --named.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Compare two inputs, given in order.
    Compare {
        #[command(flatten)]
        input: Inputs,
    },
    /// Bucket a corpus by polynomial and compare the graphs sharing a bucket.
    Scan {
        /// graph6 file or directory of edge-list files.
        path: PathBuf,
        #[arg(long, default_value = "da", value_parser = clap::value_parser!(ScanKey))]
        key: ScanKey,
    },
    /// Closed form of a family instance, without enumeration.
    Family {
        spec: String,
        #[arg(long, value_enum, default_value_t = Errata::Corrected)]
        errata: Errata,
    },
}

impl clap::builder::ValueParserFactory for ScanKey {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<ScanKey>())
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Failure {
        let code = match e {
            EnumError::GuardExceeded { .. } => 3,
            _ => 4,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PropsError> for Failure {
    fn from(e: PropsError) -> Failure {
        Failure::new(1, e.to_string())
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Failure {
        Failure::new(2, e.to_string())
    }
}

impl From<CharacterizeError> for Failure {
    fn from(e: CharacterizeError) -> Failure {
        match e {
            CharacterizeError::Enumeration(e) => e.into(),
            CharacterizeError::Family(e) => Failure::new(4, e.to_string()),
            e => Failure::new(1, e.to_string()),
        }
    }
}

impl From<CorpusError> for Failure {
    fn from(e: CorpusError) -> Failure {
        match e {
            CorpusError::Family(e) => Failure::new(2, e.to_string()),
            CorpusError::Enumeration(e) => e.into(),
            CorpusError::Characterize(e) => e.into(),
        }
    }
}

/// One resolved input.
enum Source {
    Graph(Graph, Option<FamilySpec>),
    Poly(BiPoly, Option<usize>),
}

impl Source {
    fn da(&self, cfg: &EnumConfig) -> Result<BiPoly, Failure> {
        match self {
            Source::Graph(g, _) => Ok(compute_da(g, cfg)?),
            Source::Poly(p, _) => Ok(p.clone()),
        }
    }

    fn order(&self, da: &BiPoly) -> Result<usize, Failure> {
        match self {
            Source::Graph(g, _) => Ok(g.order()),
            Source::Poly(_, Some(n)) => Ok(*n),
            Source::Poly(_, None) => Ok(order_of(da)? as usize),
        }
    }
}

fn parse_spec(s: &str) -> Result<FamilySpec, Failure> {
    s.parse::<FamilySpec>()
        .map_err(|e| Failure::new(2, format!("--family {s}: {e}")))
}

fn resolve(kind: &str, value: &str) -> Result<Source, Failure> {
    match kind {
        "family" => {
            let spec = parse_spec(value)?;
            let g = spec
                .graph()
                .map_err(|e| Failure::new(2, format!("--family {value}: {e}")))?;
            Ok(Source::Graph(g, Some(spec)))
        }
        "named" => {
            let named = value
                .parse::<NamedGraph>()
                .map_err(|e| Failure::new(2, format!("--named {value}: {e}")))?;
            Ok(Source::Graph(named.graph(), Some(FamilySpec::Named(named))))
        }
        "edges" => Ok(Source::Graph(
            read_edge_list(value.as_ref()).map_err(|e| Failure::new(2, format!("--edges {value}: {e}")))?,
            None,
        )),
        "g6" => Ok(Source::Graph(
            parse_graph6(value).map_err(|e| Failure::new(2, format!("--g6 {value}: {e}")))?,
            None,
        )),
        "poly" => {
            let text = std::fs::read_to_string(value)
                .map_err(|e| Failure::new(2, format!("--poly {value}: {e}")))?;
            let (p, n) =
                bipoly_from_json(&text).map_err(|e| Failure::new(2, format!("--poly {value}: {e}")))?;
            if p.is_zero() {
                return Err(Failure::new(1, format!("--poly {value}: zero polynomial")));
            }
            Ok(Source::Poly(p, n))
        }
        _ => unreachable!("unknown input kind {kind}"),
    }
}

const INPUT_KINDS: [&str; 5] = ["family", "named", "edges", "g6", "poly"];

/// Inputs of a subcommand in command-line order.
fn ordered_inputs(m: &ArgMatches) -> Result<Vec<Source>, Failure> {
    let mut found: Vec<(usize, &str, String)> = Vec::new();
    for kind in INPUT_KINDS {
        let (Some(idx), Some(vals)) = (m.indices_of(kind), m.get_raw(kind)) else {
            continue;
        };
        for (i, v) in idx.zip(vals) {
            found.push((i, kind, v.to_string_lossy().into_owned()));
        }
    }
    found.sort();
    found.iter().map(|(_, k, v)| resolve(k, v)).collect()
}

fn single(mut inputs: Vec<Source>) -> Result<Source, Failure> {
    if inputs.len() != 1 {
        return Err(Failure::new(
            2,
            format!(
                "expected exactly one input (--family, --named, --edges, --g6 or --poly), got {}",
                inputs.len()
            ),
        ));
    }
    Ok(inputs.remove(0))
}

fn guard(cli: &Cli) -> Result<u64, Failure> {
    if let Some(g) = cli.guard {
        return Ok(g);
    }
    match std::env::var(GUARD_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::new(2, format!("{GUARD_ENV}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_SUBGRAPHS),
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn profile_text(p: &PropertyProfile) -> String {
    let mut s = String::new();
    let degrees: Vec<String> = p.degrees.iter().map(u64::to_string).collect();
    let _ = writeln!(s, "order: {}", p.order);
    let _ = writeln!(s, "size: {}", p.size);
    let _ = writeln!(s, "connected: {}", p.connected);
    let _ = writeln!(s, "degrees: {}", degrees.join(" "));
    match p.cut_vertices {
        Some(c) => {
            let _ = writeln!(s, "cut_vertices: {c}");
        }
        None => s.push_str("cut_vertices: none (disconnected)\n"),
    }
    let _ = writeln!(
        s,
        "max_component: order {}, count {}",
        p.max_component.0, p.max_component.1
    );
    match p.regular {
        Some(d) => {
            let _ = writeln!(s, "regular: {d}");
        }
        None => s.push_str("regular: none\n"),
    }
    let _ = writeln!(s, "k3: {}", p.k3);
    let _ = writeln!(s, "s32: {}", p.s32);
    let _ = writeln!(s, "s33: {}", p.s33);
    s
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

fn execute(cli: &Cli, matches: &ArgMatches, stderr: &mut dyn Write) -> Result<String, Failure> {
    let cfg = EnumConfig {
        parallel: cli.parallel,
        ..EnumConfig::with_guard(guard(cli)?)
    };
    let json = cli.format == Format::Json;
    let sub = matches.subcommand().map(|(_, m)| m).expect("subcommand required");
    match &cli.command {
        Command::Poly { which, .. } => {
            let src = single(ordered_inputs(sub)?)?;
            let da = src.da(&cfg)?;
            let n = src.order(&da)?;
            let out = match which {
                Which::Da => {
                    if json {
                        return Ok(render_json(&bipoly_to_value(&da, Some(n))));
                    }
                    da.to_canonical_text()
                }
                other => {
                    let u = match other {
                        Which::Alliance => alliance_polynomial(&da),
                        Which::Subgraph => induced_connected_subgraph_polynomial(&da),
                        _ => {
                            strong_alliance_polynomial(&da, n).map_err(|e| Failure::new(1, e.to_string()))?
                        }
                    };
                    if json {
                        return Ok(render_json(&unipoly_to_value(&u)));
                    }
                    u.to_string()
                }
            };
            Ok(out + "\n")
        }
        Command::Props { .. } => {
            let src = single(ordered_inputs(sub)?)?;
            let p = profile(&src.da(&cfg)?)?;
            Ok(if json {
                render_json(&profile_to_value(&p))
            } else {
                profile_text(&p)
            })
        }
        Command::Identify { corpus, .. } => {
            let src = single(ordered_inputs(sub)?)?;
            if let Some(path) = corpus {
                let Source::Graph(_, Some(spec)) = src else {
                    return Err(Failure::new(2, "--corpus needs --family or --named"));
                };
                let corpus = read_corpus(path)?;
                let r = verify_characterization(&spec, &corpus, &cfg, cli.iso_limit)?;
                if json {
                    return Ok(render_json(&serde_json::to_value(&r).expect("plain data")));
                }
                let mut s = String::new();
                let _ = writeln!(s, "query: {}", r.query);
                for m in &r.matches {
                    let _ = writeln!(s, "match: {} ({})", m.spec, m.evidence);
                }
                let _ = writeln!(s, "corpus hits: {}", r.corpus_hits.len());
                for h in &r.corpus_hits {
                    let _ = writeln!(s, "  {} {} isomorphic: {}", h.id, h.graph6, yes_no(h.isomorphic));
                }
                for e in &r.errors {
                    let _ = writeln!(s, "skipped {}: {}", e.id, e.message);
                }
                let _ = writeln!(s, "holds on corpus: {}", r.holds);
                return Ok(s);
            }
            let da = src.da(&cfg)?;
            let found = identify_families(&da, &cfg)?;
            let regular = regular_degree(&da)?;
            if json {
                let matches: Vec<Value> = found
                    .iter()
                    .map(|m| json!({"spec": m.spec.to_string(), "evidence": evidence_name(m.evidence)}))
                    .collect();
                return Ok(render_json(&json!({"matches": matches, "regular": regular})));
            }
            let mut s = String::new();
            if found.is_empty() {
                s.push_str("no family matches\n");
            }
            for m in &found {
                let _ = writeln!(s, "{} ({})", m.spec, evidence_name(m.evidence));
            }
            if let Some(d) = regular {
                let _ = writeln!(s, "regular of degree {d}");
            }
            Ok(s)
        }
        Command::Compare { .. } => {
            let inputs = ordered_inputs(sub)?;
            let [a, b] = &inputs[..] else {
                return Err(Failure::new(
                    2,
                    format!("compare needs exactly two inputs, got {}", inputs.len()),
                ));
            };
            let (da_a, da_b) = (a.da(&cfg)?, b.da(&cfg)?);
            let iso = match (a, b) {
                (Source::Graph(g, _), Source::Graph(h, _)) => are_isomorphic_small(g, h, cli.iso_limit).ok(),
                _ => None,
            };
            let r = CompareReport::from_polys(&da_a, a.order(&da_a)?, &da_b, b.order(&da_b)?, iso);
            if json {
                return Ok(render_json(&json!({
                    "da_equal": r.da_equal,
                    "A_equal": r.alliance_equal,
                    "a_equal": r.strong_alliance_equal,
                    "q_equal": r.subgraph_equal,
                    "isomorphic": r.isomorphic,
                })));
            }
            let mut s = String::new();
            let _ = writeln!(s, "da_equal: {}", r.da_equal);
            let _ = writeln!(s, "A_equal: {}", r.alliance_equal);
            let _ = writeln!(s, "a_equal: {}", r.strong_alliance_equal);
            let _ = writeln!(s, "q_equal: {}", r.subgraph_equal);
            let _ = writeln!(s, "isomorphic: {}", yes_no(r.isomorphic));
            Ok(s)
        }
        Command::Scan { path, key } => {
            let corpus = read_corpus(path)?;
            let r = scan_corpus(&corpus, *key, &cfg, cli.iso_limit)?;
            Ok(if json {
                render_json(&serde_json::to_value(&r).expect("plain data"))
            } else {
                r.summary()
            })
        }
        Command::Family { spec, errata } => {
            let spec = parse_spec(spec)?;
            let mode = match errata {
                Errata::Corrected => ErrataMode::Corrected,
                Errata::Paper => ErrataMode::PaperLiteral,
            };
            let fp = closed_form(&spec, mode).map_err(|e| Failure::new(2, e.to_string()))?;
            if mode == ErrataMode::PaperLiteral && matches!(spec, FamilySpec::Star(_)) {
                let _ = writeln!(
                    stderr,
                    "warning: printing the star formula as published; it disagrees with \
                     enumeration (use --errata corrected)"
                );
            }
            let errata_name = match errata {
                Errata::Corrected => "corrected",
                Errata::Paper => "paper",
            };
            match &fp.kind {
                FingerprintKind::Full(p) => Ok(if json {
                    render_json(&json!({
                        "spec": spec.to_string(),
                        "errata": errata_name,
                        "kind": "full",
                        "poly": bipoly_to_value(p, Some(spec.order())),
                    }))
                } else {
                    p.to_canonical_text() + "\n"
                }),
                FingerprintKind::Slice(slices) => Ok(if json {
                    let v: Vec<Value> = slices
                        .iter()
                        .map(|(k, u)| json!({"x": k, "poly": unipoly_to_value(u)}))
                        .collect();
                    render_json(&json!({
                        "spec": spec.to_string(),
                        "errata": errata_name,
                        "kind": "slice",
                        "slices": v,
                    }))
                } else {
                    let mut s = format!("{spec}: only these x-slices are known\n");
                    for (k, u) in slices {
                        let _ = writeln!(s, "[x^{k}] {u}");
                    }
                    s
                }),
            }
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let cli = Cli::from_arg_matches(&matches).expect("validated by clap");
    match execute(&cli, &matches, stderr) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
