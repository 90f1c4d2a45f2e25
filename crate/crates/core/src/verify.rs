//! Batch comparison of the greedy decision rule against the exact clique
//! oracle, with deterministic JSON/CSV report emission.
//!
//! Disagreements are a first-class result here, not a failure mode: the
//! reports exist to measure how often the rule is right.

use crate::graph::{gen_gnp, Graph, GraphError};
use crate::greedy::{decide, BudgetVariant};
use crate::oracles::has_clique_exact;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

/// Records embed the full edge list only up to this vertex count; larger
/// graphs stay reconstructible from the report's mode/seed metadata.
pub const MAX_EMBEDDED_N: u32 = 10;

/// Exhaustive mode refuses anything past this order; 2^C(6,2) = 32768
/// labeled graphs is the intended ceiling.
pub const MAX_EXHAUSTIVE_N: u32 = 6;

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) fn serialize_yes_no<S: Serializer>(b: &bool, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(yes_no(*b))
}

#[derive(Debug, Error, PartialEq)]
pub enum HuntError {
    #[error("exhaustive enumeration for n={n} exceeds the n<={MAX_EXHAUSTIVE_N} guard")]
    TooLarge { n: u32 },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}

/// One (graph, k) comparison of the greedy claim against the oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub n: u32,
    pub edges: Option<Vec<(u32, u32)>>,
    pub k: u32,
    #[serde(serialize_with = "serialize_yes_no")]
    pub claimed: bool,
    #[serde(serialize_with = "serialize_yes_no")]
    pub oracle: bool,
    pub agree: bool,
    pub short_circuited: bool,
    #[serde(skip)]
    pub variant: BudgetVariant,
}

/// Compares the decision rule against the exact oracle on one instance.
pub fn verify_graph(
    g: &Graph,
    k: u32,
    variant: BudgetVariant,
) -> Result<VerificationRecord, crate::greedy::GreedyError> {
    let outcome = decide(g, k, variant)?;
    let oracle = has_clique_exact(g, k);
    Ok(VerificationRecord {
        n: g.n(),
        edges: (g.n() <= MAX_EMBEDDED_N).then(|| g.edges().to_vec()),
        k,
        claimed: outcome.claimed,
        oracle,
        agree: outcome.claimed == oracle,
        short_circuited: outcome.short_circuited,
        variant,
    })
}

/// What to sweep: every labeled graph of one order, or seeded G(n, p)
/// samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HuntMode {
    Exhaustive { n_max: u32 },
    Random { n: u32, p: f64, trials: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KTally {
    pub total: usize,
    pub agreements: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub by_k: BTreeMap<u32, KTally>,
    pub first_disagreement: Option<VerificationRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetaLimits {
    pub n: u32,
    pub p: Option<f64>,
    pub trials: Option<usize>,
    pub embed_max_n: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportMeta {
    pub version: String,
    pub mode: String,
    pub seed: u64,
    pub variant: BudgetVariant,
    pub limits: MetaLimits,
}

/// A full sweep: metadata, records in canonical order, and tallies that
/// are recomputable from the records alone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub meta: ReportMeta,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

fn summarize(records: &[VerificationRecord]) -> Summary {
    let mut by_k: BTreeMap<u32, KTally> = BTreeMap::new();
    let mut agreements = 0;
    let mut first_disagreement = None;
    for r in records {
        let tally = by_k.entry(r.k).or_insert(KTally {
            total: 0,
            agreements: 0,
            disagreements: 0,
        });
        tally.total += 1;
        if r.agree {
            tally.agreements += 1;
            agreements += 1;
        } else {
            tally.disagreements += 1;
            if first_disagreement.is_none() {
                first_disagreement = Some(r.clone());
            }
        }
    }
    Summary {
        total: records.len(),
        agreements,
        disagreements: records.len() - agreements,
        by_k,
        first_disagreement,
    }
}

/// Sweeps graphs per `mode`, comparing the greedy claim against the oracle
/// for every k in `2..=n`. Records come back in enumeration (or trial)
/// order, so identical arguments give identical reports.
pub fn hunt(mode: HuntMode, variant: BudgetVariant) -> Result<VerificationReport, HuntError> {
    let mut records = Vec::new();
    let meta = match mode {
        HuntMode::Exhaustive { n_max } => {
            if n_max > MAX_EXHAUSTIVE_N {
                return Err(HuntError::TooLarge { n: n_max });
            }
            let pairs = n_max * n_max.saturating_sub(1) / 2;
            for mask in 0..1u64 << pairs {
                let g = Graph::from_pair_mask(n_max, mask);
                for k in 2..=n_max {
                    records.push(verify_graph(&g, k, variant).expect("k is within 2..=n"));
                }
            }
            ReportMeta {
                version: env!("CARGO_PKG_VERSION").to_string(),
                mode: "exhaustive".to_string(),
                seed: 0,
                variant,
                limits: MetaLimits {
                    n: n_max,
                    p: None,
                    trials: None,
                    embed_max_n: MAX_EMBEDDED_N,
                },
            }
        }
        HuntMode::Random { n, p, trials, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(HuntError::InvalidProbability(p));
            }
            for trial in 0..trials {
                let g = match gen_gnp(n, p, seed.wrapping_add(trial as u64)) {
                    Ok(g) => g,
                    Err(GraphError::InvalidProbability(p)) => {
                        return Err(HuntError::InvalidProbability(p))
                    }
                    Err(e) => unreachable!("gnp only rejects probabilities: {e}"),
                };
                for k in 2..=n {
                    records.push(verify_graph(&g, k, variant).expect("k is within 2..=n"));
                }
            }
            ReportMeta {
                version: env!("CARGO_PKG_VERSION").to_string(),
                mode: "random".to_string(),
                seed,
                variant,
                limits: MetaLimits {
                    n,
                    p: Some(p),
                    trials: Some(trials),
                    embed_max_n: MAX_EMBEDDED_N,
                },
            }
        }
    };
    let summary = summarize(&records);
    Ok(VerificationReport {
        meta,
        records,
        summary,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown format `{other}` (expected json|csv)")),
        }
    }
}

fn edges_field(edges: &Option<Vec<(u32, u32)>>) -> String {
    match edges {
        None => String::new(),
        Some(list) => {
            let mut s = String::new();
            for (i, (u, v)) in list.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{u}-{v}");
            }
            s
        }
    }
}

/// Renders a report; identical reports render byte-identically.
pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            serde_json::to_string(report).expect("report serialization cannot fail")
        }
        ReportFormat::Csv => {
            let mut out = String::from("n,edges,k,claimed,oracle,agree,short_circuited\n");
            for r in &report.records {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n,
                    edges_field(&r.edges),
                    r.k,
                    yes_no(r.claimed),
                    yes_no(r.oracle),
                    r.agree,
                    r.short_circuited
                );
            }
            out
        }
    }
}
