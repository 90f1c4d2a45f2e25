//! Static-cost greedy interdiction over vertex/pair cost sets, the clique
//! decision rule built on top of it, and the audit that measures what a
//! finished trace actually did to the layered network.
//!
//! The instance assigns every vertex its degree as a removal cost and every
//! edge the discounted pair cost `c_u + c_v - 1` (adjacent vertices share
//! one arc in the network, so removing both together saves one unit). The
//! run repeatedly takes the cheapest affordable pair, else the cheapest
//! affordable single vertex, else stops. Costs are frozen at build time
//! and never recomputed after removals; the audit exists precisely to
//! measure the gap that opens between those static charges and the true
//! state of the network.

use crate::flow::{max_flow, InterdictionSet};
use crate::graph::Graph;
use crate::reduction::{build_network, interdiction_budget};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GreedyError {
    #[error("k={k} outside 2..={n}")]
    KOutOfRange { k: u32, n: u32 },
    #[error("trace does not fit this graph: {0}")]
    TraceGraphMismatch(String),
}

/// How a pair removal is charged against the budget.
///
/// `Prose` charges the discounted pair cost `c_u + c_v - 1`, the same value
/// the eligibility check uses, so the budget never goes negative. `Literal`
/// charges the plain sum `c_u + c_v`, which can overdraw the budget by one
/// on a step that passed its check; the run then stops on its own, since
/// nothing is affordable below zero. Single-vertex removals charge the
/// vertex cost under both variants.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BudgetVariant {
    #[default]
    Prose,
    Literal,
}

impl fmt::Display for BudgetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BudgetVariant::Prose => "prose",
            BudgetVariant::Literal => "literal",
        })
    }
}

impl FromStr for BudgetVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "prose" => Ok(BudgetVariant::Prose),
            "literal" => Ok(BudgetVariant::Literal),
            other => Err(format!("unknown variant `{other}` (expected prose|literal)")),
        }
    }
}

/// A vertex with its frozen removal cost (its degree at build time).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CostItem {
    pub vertex: u32,
    pub cost: i64,
}

/// An adjacent pair with its frozen simultaneous cost `c_u + c_v - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairItem {
    pub u: u32,
    pub v: u32,
    pub cost: i64,
}

/// The state the greedy runs on: vertices in id order, pairs stably sorted
/// ascending by cost (input edge order breaks ties), and the budget
/// `|E| - k(k-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyInstance {
    pub t_set: Vec<CostItem>,
    pub s_set: Vec<PairItem>,
    pub budget: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Pair,
    Single,
}

/// One removal, with the charge and the budget on both sides of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub removed: Vec<u32>,
    pub charged: i64,
    pub budget_before: i64,
    pub budget_after: i64,
}

/// Ordered log of a full run plus the surviving items.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyTrace {
    pub steps: Vec<TraceStep>,
    pub final_t: Vec<CostItem>,
    pub final_budget: i64,
}

/// Result of the decision rule for one (graph, k).
///
/// When not short-circuited, `claimed` is exactly `final_t_size == k`.
/// A short circuit means `C(k,2) > |E|`: a k-clique needs more edges than
/// the graph has, so the answer is no without running anything.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionOutcome {
    #[serde(serialize_with = "crate::verify::serialize_yes_no")]
    pub claimed: bool,
    pub final_t_size: usize,
    pub initial_budget: i64,
    pub trace: GreedyTrace,
    pub short_circuited: bool,
}

/// Result of scanning k from n down to 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximizeOutcome {
    pub claimed_size: u32,
    pub per_k: Vec<DecisionOutcome>,
}

/// What a trace actually did: the removed vertices, the total charged,
/// the number of arcs truly incident to the removals, and the exact
/// residual flow after deleting those arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceAudit {
    pub removed: Vec<u32>,
    pub charged_total: i64,
    pub true_arc_count: usize,
    pub actual_flow: usize,
}

fn cost_items(g: &Graph) -> Vec<CostItem> {
    g.degrees()
        .iter()
        .enumerate()
        .map(|(i, &d)| CostItem {
            vertex: i as u32 + 1,
            cost: d as i64,
        })
        .collect()
}

/// Builds the greedy state for deciding a k-clique.
pub fn build_instance(g: &Graph, k: u32) -> Result<GreedyInstance, GreedyError> {
    let n = g.n();
    if k < 2 || k > n {
        return Err(GreedyError::KOutOfRange { k, n });
    }
    let t_set = cost_items(g);
    let mut s_set: Vec<PairItem> = g
        .edges()
        .iter()
        .map(|&(u, v)| PairItem {
            u,
            v,
            cost: t_set[(u - 1) as usize].cost + t_set[(v - 1) as usize].cost - 1,
        })
        .collect();
    s_set.sort_by_key(|p| p.cost); // stable: ties keep edge input order
    Ok(GreedyInstance {
        t_set,
        s_set,
        budget: interdiction_budget(g.edge_count(), k),
    })
}

/// Runs the greedy to termination and returns the surviving count with the
/// full trace.
///
/// Each round: if the cheapest pair is affordable, remove it (both
/// endpoints leave `T`, every pair touching either endpoint leaves `S`);
/// otherwise if the cheapest single vertex is affordable, remove it and
/// purge its pairs; otherwise stop. Ties take the first occurrence in
/// stored order.
pub fn greedy_run(inst: &GreedyInstance, variant: BudgetVariant) -> (usize, GreedyTrace) {
    let mut t = inst.t_set.clone();
    let mut s = inst.s_set.clone();
    let mut budget = inst.budget;
    let mut steps = Vec::new();

    loop {
        // s is sorted ascending by cost, so the head is the minimum
        if let Some(&pair) = s.first() {
            if pair.cost <= budget {
                let charged = match variant {
                    BudgetVariant::Prose => pair.cost,
                    BudgetVariant::Literal => pair.cost + 1,
                };
                t.retain(|c| c.vertex != pair.u && c.vertex != pair.v);
                s.retain(|q| {
                    q.u != pair.u && q.u != pair.v && q.v != pair.u && q.v != pair.v
                });
                steps.push(TraceStep {
                    kind: StepKind::Pair,
                    removed: vec![pair.u, pair.v],
                    charged,
                    budget_before: budget,
                    budget_after: budget - charged,
                });
                budget -= charged;
                continue;
            }
        }
        // min_by_key keeps the first of equal minima, i.e. vertex-id order
        if let Some((pos, &item)) = t.iter().enumerate().min_by_key(|(_, c)| c.cost) {
            if item.cost <= budget {
                t.remove(pos);
                s.retain(|q| q.u != item.vertex && q.v != item.vertex);
                steps.push(TraceStep {
                    kind: StepKind::Single,
                    removed: vec![item.vertex],
                    charged: item.cost,
                    budget_before: budget,
                    budget_after: budget - item.cost,
                });
                budget -= item.cost;
                continue;
            }
        }
        break;
    }

    let size = t.len();
    (
        size,
        GreedyTrace {
            steps,
            final_t: t,
            final_budget: budget,
        },
    )
}

/// The decision rule: claim a k-clique iff the greedy leaves exactly k
/// items standing. `C(k,2) > |E|` short-circuits to "no".
pub fn decide(g: &Graph, k: u32, variant: BudgetVariant) -> Result<DecisionOutcome, GreedyError> {
    let n = g.n();
    if k < 2 || k > n {
        return Err(GreedyError::KOutOfRange { k, n });
    }
    let budget = interdiction_budget(g.edge_count(), k);
    if budget < 0 {
        let final_t = cost_items(g);
        return Ok(DecisionOutcome {
            claimed: false,
            final_t_size: final_t.len(),
            initial_budget: budget,
            trace: GreedyTrace {
                steps: Vec::new(),
                final_t,
                final_budget: budget,
            },
            short_circuited: true,
        });
    }
    let inst = build_instance(g, k)?;
    let (final_t_size, trace) = greedy_run(&inst, variant);
    Ok(DecisionOutcome {
        claimed: final_t_size == k as usize,
        final_t_size,
        initial_budget: budget,
        trace,
        short_circuited: false,
    })
}

/// Runs `decide` for k = n, n-1, ..., 2 with a fresh instance each time and
/// stops at the first claimed yes. With no claim at all, a single vertex is
/// its own clique, so the size falls back to 1 (0 on the empty graph).
pub fn maximize(g: &Graph, variant: BudgetVariant) -> MaximizeOutcome {
    let n = g.n();
    let mut per_k = Vec::new();
    for k in (2..=n).rev() {
        let outcome = decide(g, k, variant).expect("k is within 2..=n");
        let claimed = outcome.claimed;
        per_k.push(outcome);
        if claimed {
            return MaximizeOutcome {
                claimed_size: k,
                per_k,
            };
        }
    }
    MaximizeOutcome {
        claimed_size: if n >= 1 { 1 } else { 0 },
        per_k,
    }
}

/// Replays a trace against its graph: collects the removed set, recomputes
/// what interdicting its incident arcs really does to the network, and
/// reports the totals side by side.
pub fn audit_trace(g: &Graph, trace: &GreedyTrace) -> Result<TraceAudit, GreedyError> {
    let n = g.n();
    let mut removed_set = HashSet::new();
    let mut removed = Vec::new();
    let mut charged_total = 0i64;
    for step in &trace.steps {
        let expected_len = match step.kind {
            StepKind::Pair => 2,
            StepKind::Single => 1,
        };
        if step.removed.len() != expected_len {
            return Err(GreedyError::TraceGraphMismatch(format!(
                "{:?} step removes {} vertices",
                step.kind,
                step.removed.len()
            )));
        }
        for &v in &step.removed {
            if v == 0 || v > n {
                return Err(GreedyError::TraceGraphMismatch(format!(
                    "vertex {v} outside 1..={n}"
                )));
            }
            if !removed_set.insert(v) {
                return Err(GreedyError::TraceGraphMismatch(format!(
                    "vertex {v} removed twice"
                )));
            }
            removed.push(v);
        }
        if step.kind == StepKind::Pair && !g.has_edge(step.removed[0], step.removed[1]) {
            return Err(GreedyError::TraceGraphMismatch(format!(
                "pair ({}, {}) is not an edge",
                step.removed[0], step.removed[1]
            )));
        }
        charged_total += step.charged;
    }

    let incident: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, (u, v))| removed_set.contains(u) || removed_set.contains(v))
        .map(|(i, _)| i)
        .collect();
    let true_arc_count = incident.len();
    let net = build_network(g);
    let actual_flow =
        max_flow(&net, &InterdictionSet::new(incident)).expect("edge indices are in range");
    removed.sort_unstable();
    Ok(TraceAudit {
        removed,
        charged_total,
        true_arc_count,
        actual_flow,
    })
}
