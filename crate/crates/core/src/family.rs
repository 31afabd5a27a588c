//! Parameterised graph families and the four fixed comparison graphs.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    BadParameters { family: &'static str, reason: String },
    #[error("unknown family or graph name `{0}`")]
    UnknownName(String),
    #[error("cannot parse family spec `{0}` (expected name:p1,p2,...)")]
    Syntax(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The two pairs of 8-vertex graphs that share an alliance polynomial but
/// have different defensive alliance polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedGraph {
    G1,
    G2,
    G3,
    G4,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 4] = [NamedGraph::G1, NamedGraph::G2, NamedGraph::G3, NamedGraph::G4];

    /// Edge list over vertices `0..8`.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            NamedGraph::G1 => &[
                (0, 1),
                (1, 3),
                (3, 2),
                (2, 0),
                (0, 4),
                (4, 6),
                (6, 5),
                (5, 7),
                (7, 4),
                (5, 1),
            ],
            NamedGraph::G2 => &[
                (0, 1),
                (1, 3),
                (3, 2),
                (2, 0),
                (0, 4),
                (4, 5),
                (5, 1),
                (5, 6),
                (6, 7),
                (7, 3),
            ],
            NamedGraph::G3 => &[
                (0, 1),
                (1, 2),
                (2, 0),
                (1, 3),
                (1, 4),
                (0, 5),
                (5, 6),
                (6, 7),
                (7, 5),
            ],
            NamedGraph::G4 => &[
                (0, 1),
                (1, 2),
                (2, 0),
                (5, 3),
                (5, 4),
                (1, 5),
                (0, 6),
                (6, 7),
                (7, 0),
            ],
        }
    }

    pub fn graph(self) -> Graph {
        Graph::from_edges(8, self.edges().iter().copied())
            .expect("named graph edge lists are valid")
            .with_label(self.name())
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::G1 => "G1",
            NamedGraph::G2 => "G2",
            NamedGraph::G3 => "G3",
            NamedGraph::G4 => "G4",
        }
    }
}

impl FromStr for NamedGraph {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s.trim() {
            "G1" | "g1" => Ok(NamedGraph::G1),
            "G2" | "g2" => Ok(NamedGraph::G2),
            "G3" | "g3" => Ok(NamedGraph::G3),
            "G4" | "g4" => Ok(NamedGraph::G4),
            other => Err(FamilyError::UnknownName(other.to_string())),
        }
    }
}

pub fn named_graph(name: &str) -> Result<Graph, FamilyError> {
    Ok(name.parse::<NamedGraph>()?.graph())
}

/// A graph family member. Variant order is the family sort order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    /// `P_n`, `n >= 2`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `S_n = nK_1 + K_1`, `n >= 1` leaves.
    Star(usize),
    /// `S_{r,t}`: stars with `r` and `t` leaves, centers adjacent.
    DoubleStar(usize, usize),
    /// `K_n`, `n >= 1`.
    Complete(usize),
    /// `K_{n,m}`.
    CompleteBipartite(usize, usize),
    /// `W_n = C_n + K_1`, `n >= 3`.
    Wheel(usize),
    /// `W'_n = P_n + K_1`, `n >= 4`.
    OpenWheel(usize),
    /// `F_n = nK_2 + K_1`.
    Friendship(usize),
    /// `B_n = nK_1 + K_2`.
    TriangularBook(usize),
    /// `B_{n,2}`: `n` four-cycles sharing one spine edge.
    QuadrilateralBook(usize),
    /// `K_n` plus a vertex adjacent to `r` of its vertices, `0 <= r <= n`.
    Attached {
        n: usize,
        r: usize,
    },
    Named(NamedGraph),
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Star(_) => "star",
            FamilySpec::DoubleStar(..) => "double_star",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::OpenWheel(_) => "open_wheel",
            FamilySpec::Friendship(_) => "friendship",
            FamilySpec::TriangularBook(_) => "triangular_book",
            FamilySpec::QuadrilateralBook(_) => "quadrilateral_book",
            FamilySpec::Attached { .. } => "attached",
            FamilySpec::Named(_) => "named",
        }
    }

    /// Order of the generated graph (saturating, so absurd parameters still
    /// fail the order check instead of overflowing).
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::Star(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::OpenWheel(n)
            | FamilySpec::Attached { n, .. } => n.saturating_add(1),
            FamilySpec::DoubleStar(r, t) => r.saturating_add(t).saturating_add(2),
            FamilySpec::CompleteBipartite(n, m) => n.saturating_add(m),
            FamilySpec::Friendship(n) => n.saturating_mul(2).saturating_add(1),
            FamilySpec::TriangularBook(n) => n.saturating_add(2),
            FamilySpec::QuadrilateralBook(n) => n.saturating_mul(2).saturating_add(2),
            FamilySpec::Named(_) => 8,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let family = self.tag();
        let bad = |reason: &str| {
            Err(FamilyError::BadParameters {
                family,
                reason: reason.to_string(),
            })
        };
        match *self {
            FamilySpec::Path(n) if n < 2 => return bad("n must be >= 2"),
            FamilySpec::Cycle(n) if n < 3 => return bad("n must be >= 3"),
            FamilySpec::Wheel(n) if n < 3 => return bad("n must be >= 3"),
            FamilySpec::OpenWheel(n) if n < 4 => return bad("n must be >= 4"),
            FamilySpec::Star(0)
            | FamilySpec::Complete(0)
            | FamilySpec::Friendship(0)
            | FamilySpec::TriangularBook(0)
            | FamilySpec::QuadrilateralBook(0)
            | FamilySpec::Attached { n: 0, .. } => return bad("n must be >= 1"),
            FamilySpec::DoubleStar(r, t) if r == 0 || t == 0 => return bad("r and t must be >= 1"),
            FamilySpec::CompleteBipartite(n, m) if n == 0 || m == 0 => {
                return bad("both parts must be nonempty")
            }
            FamilySpec::Attached { n, r } if r > n => return bad("r must satisfy 0 <= r <= n"),
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return bad("graph order exceeds 64");
        }
        Ok(())
    }

    /// Builds the family member.
    pub fn graph(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match *self {
            FamilySpec::Path(n) => path(n)?,
            FamilySpec::Cycle(n) => cycle(n)?,
            FamilySpec::Star(n) => Graph::empty(n)?.join(&Graph::empty(1)?)?,
            FamilySpec::DoubleStar(r, t) => {
                let c2 = r + 1;
                let mut edges: Vec<(usize, usize)> = (1..=r).map(|l| (0, l)).collect();
                edges.extend((c2 + 1..=c2 + t).map(|l| (c2, l)));
                edges.push((0, c2));
                Graph::from_edges(r + t + 2, edges)?
            }
            FamilySpec::Complete(n) => complete(n)?,
            FamilySpec::CompleteBipartite(n, m) => Graph::empty(n)?.join(&Graph::empty(m)?)?,
            FamilySpec::Wheel(n) => cycle(n)?.join(&Graph::empty(1)?)?,
            FamilySpec::OpenWheel(n) => path(n)?.join(&Graph::empty(1)?)?,
            FamilySpec::Friendship(n) => {
                let matching = Graph::from_edges(2 * n, (0..n).map(|i| (2 * i, 2 * i + 1)))?;
                matching.join(&Graph::empty(1)?)?
            }
            FamilySpec::TriangularBook(n) => Graph::empty(n)?.join(&complete(2)?)?,
            FamilySpec::QuadrilateralBook(n) => {
                let mut edges = alloc::vec![(0, 1)];
                for i in 0..n {
                    let (a, b) = (2 + 2 * i, 3 + 2 * i);
                    edges.extend([(0, a), (a, b), (b, 1)]);
                }
                Graph::from_edges(2 * n + 2, edges)?
            }
            FamilySpec::Attached { n, r } => {
                let mut edges: Vec<(usize, usize)> =
                    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
                edges.extend((0..r).map(|i| (i, n)));
                Graph::from_edges(n + 1, edges)?
            }
            FamilySpec::Named(g) => return Ok(g.graph()),
        };
        Ok(g.with_label(self.to_string()))
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.graph()
}

fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

fn cycle(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::OpenWheel(n)
            | FamilySpec::Friendship(n)
            | FamilySpec::TriangularBook(n)
            | FamilySpec::QuadrilateralBook(n) => write!(f, "{tag}:{n}"),
            FamilySpec::DoubleStar(a, b) | FamilySpec::CompleteBipartite(a, b) => {
                write!(f, "{tag}:{a},{b}")
            }
            FamilySpec::Attached { n, r } => write!(f, "{tag}:{n},{r}"),
            FamilySpec::Named(g) => f.write_str(g.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Accepts `name:p1[,p2]` (e.g. `complete_bipartite:3,4`), `G1`..`G4`
    /// or `named:G1`. The result is validated.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let s = s.trim();
        let Some((name, params)) = s.split_once(':') else {
            return Ok(FamilySpec::Named(s.parse()?));
        };
        if name == "named" {
            return Ok(FamilySpec::Named(params.parse()?));
        }
        let syntax = || FamilyError::Syntax(s.to_string());
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| syntax()))
            .collect::<Result<Vec<_>, _>>()?;
        let one = |ctor: fn(usize) -> FamilySpec| match nums[..] {
            [n] => Ok(ctor(n)),
            _ => Err(syntax()),
        };
        let two = |ctor: fn(usize, usize) -> FamilySpec| match nums[..] {
            [a, b] => Ok(ctor(a, b)),
            _ => Err(syntax()),
        };
        let spec = match name {
            "path" => one(FamilySpec::Path)?,
            "cycle" => one(FamilySpec::Cycle)?,
            "star" => one(FamilySpec::Star)?,
            "double_star" => two(FamilySpec::DoubleStar)?,
            "complete" => one(FamilySpec::Complete)?,
            "complete_bipartite" => two(FamilySpec::CompleteBipartite)?,
            "wheel" => one(FamilySpec::Wheel)?,
            "open_wheel" => one(FamilySpec::OpenWheel)?,
            "friendship" => one(FamilySpec::Friendship)?,
            "triangular_book" => one(FamilySpec::TriangularBook)?,
            "quadrilateral_book" => one(FamilySpec::QuadrilateralBook)?,
            "attached" => two(|n, r| FamilySpec::Attached { n, r })?,
            other => return Err(FamilyError::UnknownName(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}
