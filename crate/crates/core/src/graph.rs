//! Simple undirected graphs with a stable edge order, plus DIMACS parsing
//! and seeded generation.
//!
//! Vertices are numbered `1..=n`. Edges are stored normalized as `(u, v)`
//! with `u < v`, in the order they arrived. That order is load-bearing:
//! edge index `i` here is source-arc index `i` in the layered network, and
//! every downstream tie-break falls back to it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt::Write as _;
use thiserror::Error;

/// Errors from graph construction and generation.
#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: u32, n: u32 },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("planted clique size {k} outside 2..={n}")]
    InvalidK { k: u32, n: u32 },
}

/// Errors from DIMACS parsing.
#[derive(Debug, Error, PartialEq)]
pub enum DimacsError {
    #[error("missing `p edge <n> <m>` problem line")]
    MissingProblemLine,
    #[error("declared {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("malformed line {0}")]
    MalformedLine(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A simple undirected graph: vertices `1..=n`, ordered edge list.
///
/// Construction enforces simplicity (no loops, no duplicates) and
/// normalizes every pair to `u < v` while preserving input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph from `n` and an edge sequence, normalizing each pair.
    pub fn from_edge_list(
        n: u32,
        pairs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            edges.push(e);
        }
        Ok(Graph { n, edges })
    }

    /// Vertex count.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Edge count.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in stored order, each normalized to `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// True if `{u, v}` is an edge (orientation-insensitive).
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    /// Per-vertex degree; index `v - 1` holds the degree of vertex `v`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n as usize];
        for &(u, v) in &self.edges {
            deg[u as usize - 1] += 1;
            deg[v as usize - 1] += 1;
        }
        deg
    }

    /// Renders the graph in DIMACS clq format.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p edge {} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {} {}", u, v);
        }
        out
    }

    /// Decodes a graph on `n` vertices from a bitmask over the
    /// lexicographic pair sequence (1,2), (1,3), ..., (n-1,n).
    ///
    /// Bit `i` of `mask` selects the `i`-th pair. Supports `n <= 11`
    /// (55 pairs); used to enumerate every labeled graph of a given order.
    pub fn from_pair_mask(n: u32, mask: u64) -> Graph {
        assert!(n <= 11, "pair mask only covers n <= 11");
        let mut edges = Vec::new();
        let mut bit = 0u32;
        for u in 1..=n {
            for v in (u + 1)..=n {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph { n, edges }
    }
}

/// Parses DIMACS clq text: `c` comment lines, one `p edge <n> <m>` line,
/// then `m` lines `e <u> <v>`. Edge order follows file order.
pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut header: Option<(u32, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() || tok.next() != Some("edge") {
                    return Err(DimacsError::MalformedLine(lineno));
                }
                let n = tok.next().and_then(|t| t.parse().ok());
                let m = tok.next().and_then(|t| t.parse().ok());
                match (n, m, tok.next()) {
                    (Some(n), Some(m), None) => header = Some((n, m)),
                    _ => return Err(DimacsError::MalformedLine(lineno)),
                }
            }
            Some("e") => {
                if header.is_none() {
                    return Err(DimacsError::MalformedLine(lineno));
                }
                let u = tok.next().and_then(|t| t.parse().ok());
                let v = tok.next().and_then(|t| t.parse().ok());
                match (u, v, tok.next()) {
                    (Some(u), Some(v), None) => pairs.push((u, v)),
                    _ => return Err(DimacsError::MalformedLine(lineno)),
                }
            }
            _ => return Err(DimacsError::MalformedLine(lineno)),
        }
    }
    let (n, m) = header.ok_or(DimacsError::MissingProblemLine)?;
    if pairs.len() != m {
        return Err(DimacsError::EdgeCountMismatch {
            declared: m,
            found: pairs.len(),
        });
    }
    Ok(Graph::from_edge_list(n, pairs)?)
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidProbability(p))
    }
}

/// G(n, p): each pair included independently with probability `p`.
///
/// Generation is keyed by a ChaCha8 stream seeded from `seed` and walks
/// pairs in lexicographic order, so identical `(n, p, seed)` yields an
/// identical edge sequence on every platform.
pub fn gen_gnp(n: u32, p: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph { n, edges })
}

/// G(n, p) with a planted clique: `k` seeded vertices are made pairwise
/// adjacent, every other pair is included with probability `p`.
pub fn gen_planted_clique(n: u32, k: u32, p: f64, seed: u64) -> Result<Graph, GraphError> {
    gen_planted_clique_with_vertices(n, k, p, seed).map(|(g, _)| g)
}

/// Same as [`gen_planted_clique`], also returning the planted vertex set
/// (sorted). The plant is chosen by a partial Fisher-Yates shuffle on the
/// same seeded stream, ahead of the pair walk.
pub fn gen_planted_clique_with_vertices(
    n: u32,
    k: u32,
    p: f64,
    seed: u64,
) -> Result<(Graph, Vec<u32>), GraphError> {
    if k < 2 || k > n {
        return Err(GraphError::InvalidK { k, n });
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u32> = (1..=n).collect();
    for i in 0..k as usize {
        let j = rng.random_range(i..n as usize);
        pool.swap(i, j);
    }
    let mut planted: Vec<u32> = pool[..k as usize].to_vec();
    planted.sort_unstable();
    let in_plant: HashSet<u32> = planted.iter().copied().collect();

    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            let forced = in_plant.contains(&u) && in_plant.contains(&v);
            if forced || rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok((Graph { n, edges }, planted))
}
