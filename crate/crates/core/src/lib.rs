//! A workbench for a greedy clique decision procedure built on max-flow
//! network interdiction, together with the exact oracles needed to audit
//! it.
//!
//! The pieces, bottom to top:
//!
//! - [`graph`]: simple undirected graphs with a stable edge order, DIMACS
//!   parsing, and seeded G(n,p) / planted-clique generation.
//! - [`reduction`]: the four-layer capacitated network a graph reduces to,
//!   and the interdiction budget `|E| - C(k,2)`.
//! - [`flow`]: exact integral max flow with chosen source arcs deleted.
//! - [`oracles`]: exact maximum clique (Bron-Kerbosch), early-exit
//!   k-clique decision, brute-force optimal interdiction, and the
//!   clique/interdiction equivalence check.
//! - [`greedy`]: the static-cost greedy interdiction, the `|T| = k`
//!   decision rule, the maximization scan, and the trace audit.
//! - [`verify`]: batch sweeps comparing the greedy claims against the
//!   oracles, with deterministic JSON/CSV reports.
//!
//! The greedy rule is a heuristic, not a decision procedure; the harness
//! exists to measure exactly where it is wrong. See `verify::hunt` for the
//! sweep entry point.

pub mod flow;
pub mod graph;
pub mod greedy;
pub mod oracles;
pub mod reduction;
pub mod verify;

pub use flow::{max_flow, FlowError, InterdictionSet};
pub use graph::{
    gen_gnp, gen_planted_clique, gen_planted_clique_with_vertices, parse_dimacs, DimacsError,
    Graph, GraphError,
};
pub use greedy::{
    audit_trace, build_instance, decide, greedy_run, maximize, BudgetVariant, CostItem,
    DecisionOutcome, GreedyError, GreedyInstance, GreedyTrace, MaximizeOutcome, PairItem,
    StepKind, TraceAudit, TraceStep,
};
pub use oracles::{
    exact_min_interdicted_flow, has_clique_exact, max_clique_exact, wood_equivalence,
    CliqueWitness, InterdictionOptimum, OracleError, WoodEquivalence, DEFAULT_ENUM_LIMIT,
};
pub use reduction::{build_network, interdiction_budget, Arc, LayeredNetwork, NetworkDump};
pub use verify::{
    emit_report, hunt, verify_graph, HuntError, HuntMode, ReportFormat, VerificationRecord,
    VerificationReport,
};

#[cfg(test)]
mod tests {
    // everything is plain owned data, safe to share or move across threads
    #[test]
    fn core_types_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::Graph>();
        assert_send_sync::<crate::LayeredNetwork>();
        assert_send_sync::<crate::InterdictionSet>();
        assert_send_sync::<crate::GreedyInstance>();
        assert_send_sync::<crate::GreedyTrace>();
        assert_send_sync::<crate::DecisionOutcome>();
        assert_send_sync::<crate::CliqueWitness>();
        assert_send_sync::<crate::VerificationReport>();
    }
}
