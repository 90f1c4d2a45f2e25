//! Shared independent oracles and trace checkers for the integration
//! suites. Everything here recomputes from first principles and stays off
//! the implementation paths it judges.

use cliquecheck::{audit_trace, BudgetVariant, DecisionOutcome, Graph, StepKind};

/// Maximum clique by scanning all 2^n vertex subsets; ties go to the
/// lexicographically smallest sorted set. Usable up to n ~ 20.
pub fn naive_max_clique(g: &Graph) -> (usize, Vec<u32>) {
    let n = g.n();
    let mut best: Option<Vec<u32>> = None;
    for mask in 0u64..1 << n {
        let verts: Vec<u32> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let is_clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if !is_clique {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => verts.len() > b.len() || (verts.len() == b.len() && verts < *b),
        };
        if better {
            best = Some(verts);
        }
    }
    let verts = best.unwrap_or_default();
    (verts.len(), verts)
}

/// Max flow by enumerating every integral assignment over the 2|E| unit
/// middle arcs: an arc set is feasible when no interdicted edge carries
/// flow and no vertex receives more than its unit sink capacity. Only for
/// |E| <= 8.
#[allow(dead_code)] // each test target compiles its own copy of this module
pub fn brute_force_flow(g: &Graph, interdicted: &[usize]) -> usize {
    let m = g.edge_count();
    assert!(m <= 8, "brute force flow is only for |E| <= 8");
    let mut best = 0;
    'mask: for mask in 0u32..1 << (2 * m) {
        let mut vertex_used = vec![false; g.n() as usize + 1];
        let mut value = 0;
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            for (slot, end) in [(2 * i, u), (2 * i + 1, v)] {
                if mask >> slot & 1 == 1 {
                    if interdicted.contains(&i) || vertex_used[end as usize] {
                        continue 'mask;
                    }
                    vertex_used[end as usize] = true;
                    value += 1;
                }
            }
        }
        best = best.max(value);
    }
    best
}

/// Replays a decision outcome's trace against the graph it came from and
/// asserts every structural invariant a well-formed run must satisfy:
/// budget ledger continuity, conservation, eligibility (no stale removals),
/// static cost accounting, overpayment safety, and the flow bound.
pub fn check_trace_invariants(g: &Graph, k: u32, variant: BudgetVariant, out: &DecisionOutcome) {
    let n = g.n();
    let degrees = g.degrees();
    let trace = &out.trace;
    let ctx = format!("n={n} k={k} variant={variant} edges={:?}", g.edges());

    // budget ledger: contiguous chain from the initial budget
    let mut budget = out.initial_budget;
    let mut removed: Vec<u32> = Vec::new();
    for step in &trace.steps {
        assert_eq!(step.budget_before, budget, "ledger break: {ctx}");
        assert_eq!(
            step.budget_after,
            step.budget_before - step.charged,
            "ledger arithmetic: {ctx}"
        );
        if variant == BudgetVariant::Prose {
            assert!(step.charged <= step.budget_before, "prose overdraft: {ctx}");
            assert!(step.budget_after >= 0, "prose negative budget: {ctx}");
        }

        // eligibility and static cost accounting
        match step.kind {
            StepKind::Pair => {
                assert_eq!(step.removed.len(), 2, "{ctx}");
                let (u, v) = (step.removed[0], step.removed[1]);
                assert!(g.has_edge(u, v), "pair is not an edge: {ctx}");
                assert!(
                    !removed.contains(&u) && !removed.contains(&v),
                    "stale pair: {ctx}"
                );
                let pair_cost =
                    degrees[u as usize - 1] as i64 + degrees[v as usize - 1] as i64 - 1;
                let expected = match variant {
                    BudgetVariant::Prose => pair_cost,
                    BudgetVariant::Literal => pair_cost + 1,
                };
                assert_eq!(step.charged, expected, "pair charge: {ctx}");
                assert!(pair_cost <= step.budget_before, "unaffordable pair: {ctx}");
            }
            StepKind::Single => {
                assert_eq!(step.removed.len(), 1, "{ctx}");
                let v = step.removed[0];
                assert!(!removed.contains(&v), "vertex removed twice: {ctx}");
                assert_eq!(
                    step.charged,
                    degrees[v as usize - 1] as i64,
                    "single charge: {ctx}"
                );
                assert!(step.charged <= step.budget_before, "unaffordable single: {ctx}");
            }
        }
        removed.extend(&step.removed);
        budget = step.budget_after;
    }
    assert_eq!(trace.final_budget, budget, "final budget: {ctx}");

    // conservation: survivors are exactly the unremoved vertices, in id
    // order, still carrying their build-time costs
    assert_eq!(
        out.final_t_size + removed.len(),
        n as usize,
        "conservation: {ctx}"
    );
    assert_eq!(trace.final_t.len(), out.final_t_size, "{ctx}");
    let expected_survivors: Vec<u32> = (1..=n).filter(|v| !removed.contains(v)).collect();
    let survivors: Vec<u32> = trace.final_t.iter().map(|c| c.vertex).collect();
    assert_eq!(survivors, expected_survivors, "survivor set: {ctx}");
    for item in &trace.final_t {
        assert_eq!(
            item.cost,
            degrees[item.vertex as usize - 1] as i64,
            "survivor cost drifted: {ctx}"
        );
    }

    // decision rule consistency
    if !out.short_circuited {
        assert_eq!(out.claimed, out.final_t_size == k as usize, "{ctx}");
    } else {
        assert!(!out.claimed, "{ctx}");
        assert!(trace.steps.is_empty(), "{ctx}");
    }

    // overpayment safety and the flow bound, via the audit
    let audit = audit_trace(g, trace).expect("trace fits its own graph");
    assert!(
        audit.charged_total >= audit.true_arc_count as i64,
        "undercharge: {ctx}"
    );
    assert!(
        audit.actual_flow <= out.final_t_size,
        "flow above survivor count: {ctx}"
    );
}
