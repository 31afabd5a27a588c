//! Independent reference computations. Nothing here calls the enumerator or
//! the polynomial extractors; graphs are read only through `order` and
//! `edges`.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use alliancepoly_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency matrix rebuilt from the edge list.
pub struct Matrix {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Graph) -> Matrix {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Matrix { n, adj }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    fn members(mask: u64) -> Vec<usize> {
        (0..64).filter(|i| mask >> i & 1 == 1).collect()
    }

    /// Breadth-first search restricted to `mask`.
    pub fn connected_within(&self, mask: u64) -> bool {
        let members = Self::members(mask);
        let Some(&start) = members.first() else {
            return false;
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &members {
                if !seen[v] && self.adj[u][v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == members.len()
    }

    /// `min over u in S of (inside(u) - outside(u)) + n`, counted directly.
    pub fn f_y(&self, mask: u64) -> u32 {
        let members = Self::members(mask);
        let min = members
            .iter()
            .map(|&u| {
                let inside = (0..self.n)
                    .filter(|&v| self.adj[u][v] && mask >> v & 1 == 1)
                    .count() as i64;
                let outside = (0..self.n)
                    .filter(|&v| self.adj[u][v] && mask >> v & 1 == 0)
                    .count() as i64;
                inside - outside
            })
            .min()
            .expect("nonempty");
        (min + self.n as i64) as u32
    }

    /// Every nonempty connected subset with its value, by testing all `2^n`.
    pub fn naive_subsets(&self) -> Vec<(u64, u32)> {
        (1..1u64 << self.n)
            .filter(|&m| self.connected_within(m))
            .map(|m| (m, self.f_y(m)))
            .collect()
    }

    pub fn components(&self, mask: u64) -> Vec<u64> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if left >> v & 1 == 1 && comp >> v & 1 == 0 && self.adj[u][v] {
                        comp |= 1 << v;
                        queue.push_back(v);
                    }
                }
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components(self.full()).len() == 1
    }

    /// Vertices whose deletion increases the number of components.
    pub fn cut_vertices(&self) -> u64 {
        let base = self.components(self.full()).len();
        (0..self.n)
            .filter(|&v| self.components(self.full() & !(1 << v)).len() > base)
            .count() as u64
    }

    /// Largest component order and how many components have it.
    pub fn max_component(&self) -> (u64, u64) {
        let sizes: Vec<u64> = self
            .components(self.full())
            .iter()
            .map(|c| u64::from(c.count_ones()))
            .collect();
        let max = *sizes.iter().max().unwrap();
        (max, sizes.iter().filter(|&&s| s == max).count() as u64)
    }

    pub fn triangles(&self) -> u64 {
        let n = self.n;
        let mut t = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.adj[a][b] && self.adj[b][c] && self.adj[a][c] {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    /// Paths on three vertices (not necessarily induced), by centre.
    pub fn two_paths(&self) -> u64 {
        (0..self.n)
            .map(|v| {
                let d = self.degree(v) as u64;
                d * d.saturating_sub(1) / 2
            })
            .sum()
    }
}

/// `(|S|, f) -> count` over naively found subsets.
pub fn naive_tally(m: &Matrix) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    for (mask, f) in m.naive_subsets() {
        *out.entry((mask.count_ones(), f)).or_insert(0) += 1;
    }
    out
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// 100 random graphs of order 6..=10 with varied densities.
pub fn random_corpus(seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..100)
        .map(|_| {
            let n = rng.gen_range(6..=10);
            let p = rng.gen_range(0.15..0.85);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// Parses a sum such as `x^{8}y^{10} + 2x^{7}y^{9} + 4xy^{5}`.
pub fn parse_sum(text: &str) -> Vec<(u32, u32, u64)> {
    fn power(s: &str, var: char) -> (u32, &str) {
        let Some(rest) = s.strip_prefix(var) else {
            return (0, s);
        };
        match rest.strip_prefix("^{") {
            Some(r) => {
                let end = r.find('}').unwrap();
                (r[..end].parse().unwrap(), &r[end + 1..])
            }
            None => (1, rest),
        }
    }
    text.split('+')
        .map(|t| {
            let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
            let digits = t.chars().take_while(|c| c.is_ascii_digit()).count();
            let c = if digits == 0 {
                1
            } else {
                t[..digits].parse().unwrap()
            };
            let (a, rest) = power(&t[digits..], 'x');
            let (b, rest) = power(rest, 'y');
            assert!(rest.is_empty(), "unparsed {rest:?} in {t:?}");
            (a, b, c)
        })
        .collect()
}

pub const DA_G1: &str = "x^{8}y^{10} + 2x^{7}y^{9} + 6x^{7}y^{8} + x^{6}y^{9} + 14x^{6}y^{8} + 7x^{6}y^{7}
    + 2x^{5}y^{9} + 10x^{5}y^{8} + 16x^{5}y^{7} + 2x^{4}y^{9} + 4x^{4}y^{8}+ 17x^{4}y^{7}
    + 2x^{3}y^{8} + 14x^{3}y^{7} + x^{2}y^{8} + 9x^{2}y^{7} + 4xy^{6} + 4xy^{5}";
pub const DA_G2: &str = "x^{8}y^{10} + 3x^{7}y^{9} + 5x^{7}y^{8} + x^{6}y^{9} + 15x^{6}y^{8} + 7x^{6}y^{7}
    + x^{5}y^{9} + 11x^{5}y^{8}+ 15x^{5}y^{7} + 2x^{4}y^{9} + 2x^{4}y^{8} + 19x^{4}y^{7}
    + 3x^{3}y^{8} + 13x^{3}y^{7} + x^{2}y^{8} + 9x^{2}y^{7} + 4xy^{6} + 4xy^{5}";
pub const DA_G3: &str = "x^{8}y^{9} + 3x^{7}y^{9} + 2x^{7}y^{8} + 9x^{6}y^{8} + x^{6}y^{7} + x^{5}y^{9}
    + 7x^{5}y^{8} + 3x^{5}y^{7} + x^{5}y^{6} + 2x^{4}y^{9} + 3x^{4}y^{8}+ 5x^{4}y^{7}
    + 2x^{4}y^{6} + x^{3}y^{9} + 4x^{3}y^{8} + 5x^{3}y^{7} + x^{3}y^{6} + x^{2}y^{8}
    + 4x^{2}y^{7} + 4x^{2}y^{6} + 2xy^{7} + 3xy^{6} + 2xy^{5} + xy^{4}";
pub const DA_G4: &str = "x^{8}y^{9} + 3x^{7}y^{9} + 2x^{7}y^{8} + 2x^{6}y^{9} + 7x^{6}y^{8} + x^{6}y^{7}
    + x^{5}y^{9} + 7x^{5}y^{8}+ 3x^{5}y^{7} + x^{5}y^{6} + 5x^{4}y^{8} + 5x^{4}y^{7}
    + 2x^{4}y^{6} + x^{3}y^{9} + 4x^{3}y^{8} + 5x^{3}y^{7} + x^{3}y^{6} + x^{2}y^{8}
    + 4x^{2}y^{7}+ 4x^{2}y^{6} + 2xy^{7} + 3xy^{6} + 2xy^{5} + xy^{4}";
/// Alliance polynomials with the variable written as `y`.
pub const A_G12: &str = "y^{10} + 7y^{9} + 37y^{8} + 63y^{7} + 4y^{6} + 4y^{5}";
pub const A_G34: &str = "8y^{9} + 26y^{8} + 20y^{7} + 11y^{6} + 2y^{5} + y^{4}";
