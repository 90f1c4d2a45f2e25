//! Ground truth on small instances: exact maximum clique (Bron-Kerbosch
//! with pivoting), early-exit k-clique decision, brute-force optimal
//! interdiction, and the clique/interdiction equivalence check.
//!
//! Everything here is exhaustive and deterministic; witnesses are the
//! lexicographically first optimum so repeated runs agree byte for byte.

use crate::flow::{max_flow, InterdictionSet};
use crate::graph::Graph;
use crate::reduction::{build_network, interdiction_budget, LayeredNetwork};
use serde::Serialize;
use thiserror::Error;

/// Default cap on brute-force interdiction enumeration.
pub const DEFAULT_ENUM_LIMIT: usize = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration needs {subsets} interdiction sets, over the limit of {limit}")]
    TooLarge { subsets: u128, limit: usize },
    #[error("budget {budget} is negative: a {k}-clique needs {required} edges, graph has {edge_count}")]
    NegativeBudget {
        budget: i64,
        k: u32,
        required: i64,
        edge_count: usize,
    },
}

// ---------------------------------------------------------------------------
// vertex bitsets
// ---------------------------------------------------------------------------

/// Dense vertex set over 0-based internal ids.
#[derive(Clone, PartialEq, Eq)]
struct VertSet {
    words: Vec<u64>,
}

impl VertSet {
    fn empty(n: usize) -> Self {
        VertSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersect(&self, other: &Self) -> Self {
        VertSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn subtract(&self, other: &Self) -> Self {
        VertSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Ascending iteration.
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

fn adjacency(g: &Graph) -> Vec<VertSet> {
    let n = g.n() as usize;
    let mut adj = vec![VertSet::empty(n); n];
    for &(u, v) in g.edges() {
        adj[(u - 1) as usize].insert((v - 1) as usize);
        adj[(v - 1) as usize].insert((u - 1) as usize);
    }
    adj
}

// ---------------------------------------------------------------------------
// exact clique search
// ---------------------------------------------------------------------------

/// A clique certificate: its size and sorted vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueWitness {
    pub size: usize,
    pub vertices: Vec<u32>,
}

struct Best {
    size: usize,
    vertices: Vec<usize>, // sorted, 0-based
}

fn consider(r: &[usize], best: &mut Best) {
    if r.len() < best.size {
        return;
    }
    let mut sorted = r.to_vec();
    sorted.sort_unstable();
    if r.len() > best.size || sorted < best.vertices {
        best.size = r.len();
        best.vertices = sorted;
    }
}

/// Bron-Kerbosch with pivoting. Keeps the branch bound weak enough
/// (`< best`) that every maximum-size maximal clique is still reached, so
/// the lexicographic tie-break is exact.
fn bron_kerbosch(
    adj: &[VertSet],
    r: &mut Vec<usize>,
    p: &mut VertSet,
    x: &mut VertSet,
    best: &mut Best,
) {
    if p.is_empty() && x.is_empty() {
        consider(r, best);
        return;
    }
    if r.len() + p.count() < best.size {
        return;
    }
    // pivot: most candidate neighbors, smallest id on ties
    let mut pivot = usize::MAX;
    let mut pivot_score = usize::MAX;
    for u in p.iter().chain(x.iter()) {
        let score = p.intersect(&adj[u]).count();
        if pivot == usize::MAX || score > pivot_score || (score == pivot_score && u < pivot) {
            pivot = u;
            pivot_score = score;
        }
    }
    let extend: Vec<usize> = p.subtract(&adj[pivot]).iter().collect();
    for v in extend {
        let mut np = p.intersect(&adj[v]);
        let mut nx = x.intersect(&adj[v]);
        r.push(v);
        bron_kerbosch(adj, r, &mut np, &mut nx, best);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Exact maximum clique; ties go to the lexicographically smallest
/// vertex set. The empty graph yields size 0.
pub fn max_clique_exact(g: &Graph) -> CliqueWitness {
    let n = g.n() as usize;
    if n == 0 {
        return CliqueWitness {
            size: 0,
            vertices: Vec::new(),
        };
    }
    let adj = adjacency(g);
    let mut best = Best {
        size: 0,
        vertices: Vec::new(),
    };
    let mut r = Vec::new();
    let mut p = VertSet::full(n);
    let mut x = VertSet::empty(n);
    bron_kerbosch(&adj, &mut r, &mut p, &mut x, &mut best);
    CliqueWitness {
        size: best.size,
        vertices: best.vertices.iter().map(|&v| v as u32 + 1).collect(),
    }
}

fn has_clique_from(adj: &[VertSet], p: &VertSet, remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    if p.count() < remaining {
        return false;
    }
    let mut p = p.clone();
    let candidates: Vec<usize> = p.iter().collect();
    for v in candidates {
        if has_clique_from(adj, &p.intersect(&adj[v]), remaining - 1) {
            return true;
        }
        p.remove(v);
    }
    false
}

/// True iff some `k` vertices are pairwise adjacent; exits on the first
/// witness. `k = 0` holds vacuously.
pub fn has_clique_exact(g: &Graph, k: u32) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.n() as usize;
    if k as usize > n {
        return false;
    }
    let adj = adjacency(g);
    has_clique_from(&adj, &VertSet::full(n), k as usize)
}

// ---------------------------------------------------------------------------
// brute-force optimal interdiction
// ---------------------------------------------------------------------------

/// Exhaustive optimum for interdiction at a budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterdictionOptimum {
    pub min_flow: usize,
    pub witness: InterdictionSet,
    pub budget_used: usize,
}

/// C(n, k), saturating to `u128::MAX` on overflow (anything that large is
/// over any practical limit anyway).
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = match result.checked_mul((n - i) as u128) {
            Some(r) => r / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    result
}

/// Advances `idx` to the next size-`b` combination of `0..m` in
/// lexicographic order; false when exhausted.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let b = idx.len();
    let mut i = b;
    while i > 0 {
        i -= 1;
        if idx[i] != i + m - b {
            idx[i] += 1;
            for j in i + 1..b {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive minimum over all interdiction sets of size
/// `min(budget, |E|)`; flow monotonicity makes larger sets dominate
/// smaller ones, so fixing the size loses nothing. The witness is the
/// first optimum in lexicographic subset order.
pub fn exact_min_interdicted_flow(
    net: &LayeredNetwork,
    budget: usize,
    limit: usize,
) -> Result<InterdictionOptimum, OracleError> {
    let m = net.source_arcs().len();
    let b = budget.min(m);
    let subsets = binomial(m, b);
    if subsets > limit as u128 {
        return Err(OracleError::TooLarge { subsets, limit });
    }
    let mut idx: Vec<usize> = (0..b).collect();
    let mut best_flow = usize::MAX;
    let mut witness = Vec::new();
    loop {
        let set = InterdictionSet::new(idx.iter().copied());
        let flow = max_flow(net, &set).expect("combination indices are in range");
        if flow < best_flow {
            best_flow = flow;
            witness = idx.clone();
        }
        if !next_combination(&mut idx, m) {
            break;
        }
    }
    Ok(InterdictionOptimum {
        min_flow: best_flow,
        witness: InterdictionSet::new(witness),
        budget_used: b,
    })
}

// ---------------------------------------------------------------------------
// clique <-> interdiction equivalence
// ---------------------------------------------------------------------------

/// One instance of the equivalence check behind the reduction (Wood's
/// lemma): a k-clique exists iff optimally interdicting
/// `|E| - k(k-1)/2` source arcs leaves max flow exactly k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WoodEquivalence {
    pub clique_exists: bool,
    pub optimal_flow: usize,
    pub claim_holds: bool,
}

/// Evaluates both sides of the equivalence exactly. Errs with
/// `NegativeBudget` when `C(k,2) > |E|` (a k-clique is impossible outright)
/// and `TooLarge` when the brute-force side would blow the limit.
pub fn wood_equivalence(g: &Graph, k: u32, limit: usize) -> Result<WoodEquivalence, OracleError> {
    let m = g.edge_count();
    let budget = interdiction_budget(m, k);
    if budget < 0 {
        return Err(OracleError::NegativeBudget {
            budget,
            k,
            required: (k as i64) * (k as i64 - 1) / 2,
            edge_count: m,
        });
    }
    let clique_exists = has_clique_exact(g, k);
    let net = build_network(g);
    let optimum = exact_min_interdicted_flow(&net, budget as usize, limit)?;
    let claim_holds = clique_exists == (optimum.min_flow == k as usize);
    Ok(WoodEquivalence {
        clique_exists,
        optimal_flow: optimum.min_flow,
        claim_holds,
    })
}
