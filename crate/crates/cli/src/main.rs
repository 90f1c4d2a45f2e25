//! Command-line front end: decide/maximize run the greedy rule, reduce and
//! flow expose the layered network, oracle gives exact answers, and
//! verify/hunt/audit measure the rule against them.
//!
//! Exit codes: 0 success, 1 usage error, 2 input parse error,
//! 3 expectation failure (`hunt --expect-agreement` with disagreements).

use clap::{Parser, Subcommand};
use cliquecheck::{
    audit_trace, build_network, decide, emit_report, exact_min_interdicted_flow, hunt,
    max_clique_exact, max_flow, maximize, parse_dimacs, verify_graph, BudgetVariant, Graph,
    HuntMode, InterdictionSet, ReportFormat, DEFAULT_ENUM_LIMIT,
};
use serde_json::json;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_EXPECTATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cliquecheck",
    version,
    about = "Greedy clique decision via flow interdiction, with exact oracles and audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the greedy decision rule for one k
    Decide {
        /// DIMACS graph file, or - for stdin
        #[arg(long)]
        input: String,
        /// Clique size to decide
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "prose")]
        variant: BudgetVariant,
        /// Also print each removal step as a JSON line
        #[arg(long)]
        trace: bool,
    },
    /// Scan k from n down to 2 and report the first claimed size
    Maximize {
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "prose")]
        variant: BudgetVariant,
    },
    /// Dump the layered network built from the graph as JSON
    Reduce {
        #[arg(long)]
        input: String,
    },
    /// Exact max flow with some source arcs deleted
    Flow {
        #[arg(long)]
        input: String,
        /// Comma-separated 0-based edge indices to interdict
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        interdict: Vec<String>,
    },
    /// Exact oracles
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Compare the greedy claim against the exact oracle on one instance
    Verify {
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "prose")]
        variant: BudgetVariant,
    },
    /// Sweep many graphs and report agreement with the exact oracle
    Hunt {
        /// exhaustive | random
        #[arg(long)]
        mode: String,
        /// Vertex count (exhaustive: enumerate all labeled graphs of this order)
        #[arg(long)]
        n: u32,
        /// Edge probability (random mode)
        #[arg(long)]
        p: Option<f64>,
        /// Number of seeded graphs (random mode)
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "prose")]
        variant: BudgetVariant,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
        /// Exit with code 3 if any record disagrees with the oracle
        #[arg(long)]
        expect_agreement: bool,
    },
    /// Run the greedy rule, then audit what its trace did to the network
    Audit {
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "prose")]
        variant: BudgetVariant,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact maximum clique (exhaustive search)
    MaxClique {
        #[arg(long)]
        input: String,
    },
    /// Brute-force optimal interdiction at a budget
    Interdiction {
        #[arg(long)]
        input: String,
        #[arg(long)]
        budget: usize,
        /// Cap on enumerated interdiction sets
        #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
        limit: usize,
    },
}

fn load_graph(input: &str) -> Result<Graph, (u8, String)> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| (EXIT_PARSE, format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| (EXIT_PARSE, format!("reading {input}: {e}")))?
    };
    parse_dimacs(&text).map_err(|e| (EXIT_PARSE, format!("parsing {input}: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    match cli.command {
        Command::Decide {
            input,
            k,
            variant,
            trace,
        } => {
            let g = load_graph(&input)?;
            let out = decide(&g, k, variant).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            if trace {
                for step in &out.trace.steps {
                    println!("{}", serde_json::to_string(step).unwrap());
                }
            }
            println!(
                "{}",
                json!({
                    "k": k,
                    "variant": variant.to_string(),
                    "claimed": yes_no(out.claimed),
                    "final_t_size": out.final_t_size,
                    "initial_budget": out.initial_budget,
                    "short_circuited": out.short_circuited,
                    "steps": out.trace.steps.len(),
                })
            );
            Ok(0)
        }
        Command::Maximize { input, variant } => {
            let g = load_graph(&input)?;
            let out = maximize(&g, variant);
            // outcomes are in scan order k = n, n-1, ...
            let per_k: Vec<_> = out
                .per_k
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    json!({
                        "k": g.n() - i as u32,
                        "claimed": yes_no(o.claimed),
                        "final_t_size": o.final_t_size,
                        "short_circuited": o.short_circuited,
                    })
                })
                .collect();
            println!(
                "{}",
                json!({
                    "claimed_size": out.claimed_size,
                    "variant": variant.to_string(),
                    "per_k": per_k,
                })
            );
            Ok(0)
        }
        Command::Reduce { input } => {
            let g = load_graph(&input)?;
            println!(
                "{}",
                serde_json::to_string(&build_network(&g).dump()).unwrap()
            );
            Ok(0)
        }
        Command::Flow { input, interdict } => {
            let g = load_graph(&input)?;
            let mut indices = Vec::new();
            for tok in interdict.iter().filter(|t| !t.is_empty()) {
                let idx: usize = tok
                    .parse()
                    .map_err(|_| (EXIT_USAGE, format!("bad edge index `{tok}`")))?;
                indices.push(idx);
            }
            let net = build_network(&g);
            let flow = max_flow(&net, &InterdictionSet::new(indices))
                .map_err(|e| (EXIT_USAGE, e.to_string()))?;
            println!("{flow}");
            Ok(0)
        }
        Command::Oracle { which } => match which {
            OracleCommand::MaxClique { input } => {
                let g = load_graph(&input)?;
                println!(
                    "{}",
                    serde_json::to_string(&max_clique_exact(&g)).unwrap()
                );
                Ok(0)
            }
            OracleCommand::Interdiction {
                input,
                budget,
                limit,
            } => {
                let g = load_graph(&input)?;
                let net = build_network(&g);
                let opt = exact_min_interdicted_flow(&net, budget, limit)
                    .map_err(|e| (EXIT_USAGE, e.to_string()))?;
                println!("{}", serde_json::to_string(&opt).unwrap());
                Ok(0)
            }
        },
        Command::Verify { input, k, variant } => {
            let g = load_graph(&input)?;
            let record = verify_graph(&g, k, variant).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            println!("{}", serde_json::to_string(&record).unwrap());
            Ok(0)
        }
        Command::Hunt {
            mode,
            n,
            p,
            trials,
            seed,
            variant,
            format,
            expect_agreement,
        } => {
            let mode = match mode.as_str() {
                "exhaustive" => HuntMode::Exhaustive { n_max: n },
                "random" => {
                    let p = p.ok_or((EXIT_USAGE, "random mode needs --p".to_string()))?;
                    let trials =
                        trials.ok_or((EXIT_USAGE, "random mode needs --trials".to_string()))?;
                    HuntMode::Random { n, p, trials, seed }
                }
                other => {
                    return Err((
                        EXIT_USAGE,
                        format!("unknown mode `{other}` (expected exhaustive|random)"),
                    ))
                }
            };
            let report = hunt(mode, variant).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let rendered = emit_report(&report, format);
            if rendered.ends_with('\n') {
                print!("{rendered}");
            } else {
                println!("{rendered}");
            }
            if expect_agreement && report.summary.disagreements > 0 {
                eprintln!(
                    "expectation failed: {} of {} records disagree with the oracle",
                    report.summary.disagreements, report.summary.total
                );
                return Ok(EXIT_EXPECTATION);
            }
            Ok(0)
        }
        Command::Audit { input, k, variant } => {
            let g = load_graph(&input)?;
            let out = decide(&g, k, variant).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let audit = audit_trace(&g, &out.trace).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            println!(
                "{}",
                json!({
                    "k": k,
                    "variant": variant.to_string(),
                    "claimed": yes_no(out.claimed),
                    "final_t_size": out.final_t_size,
                    "removed": audit.removed,
                    "charged_total": audit.charged_total,
                    "true_arc_count": audit.true_arc_count,
                    "actual_flow": audit.actual_flow,
                    "flow_equals_final_t": audit.actual_flow == out.final_t_size,
                })
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit 0
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
