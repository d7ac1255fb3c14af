//! `geom`: spans, ranks, chains, and polar-space computations on finite
//! point-line geometries, plus the fixed verification suite.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use geom_cli::builtins;
use geom_cli::suite::{self, SuiteConfig};
use geom_core::budget::Budget;
use geom_core::chains;
use geom_core::exchange::EpMode;
use geom_core::gallery;
use geom_core::natgeom;
use geom_core::pointset::PointSet;
use geom_core::polar::{CorankMethod, FaithfulMode, PolarRankMethod};
use geom_core::rank;
use geom_core::Geometry;

#[derive(Parser)]
#[command(
    name = "geom",
    about = "Finite point-line geometries: spans, ranks, chains, polar spaces",
    version
)]
struct Cli {
    /// Emit machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled and randomized operations
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Budget override, e.g. 1e6: span-call cap for searches, magnitude cap
    /// for the natural-number spans (also honored from GEOM_BUDGET)
    #[arg(long, global = true)]
    budget: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Builtin name: fano, pg:<dim>:<q>, example2:<n>,
    /// sp|o-par|o-plus|o-minus:<rank>:<q>
    #[arg(long, conflicts_with = "geometry")]
    builtin: Option<String>,

    /// Path to a geometry JSON file: {"points": N, "lines": [[...], ...]}
    #[arg(long)]
    geometry: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Geometry> {
        match (&self.builtin, &self.geometry) {
            (Some(name), None) => builtins::geometry(name),
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                Geometry::from_json(&text).map_err(|e| anyhow!(e))
            }
            _ => bail!("exactly one of --builtin or --geometry is required"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Span of a point set
    Span {
        #[command(flatten)]
        source: Source,
        /// Comma-separated point indices, e.g. 0,1,4 (empty set: "")
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Generating rank, chain rank, independence, exchange status
    Rank {
        #[command(flatten)]
        source: Source,
    },
    /// Exchange-property check
    EpCheck {
        #[command(flatten)]
        source: Source,
        /// exhaustive | sampled | auto (exhaustive when small enough)
        #[arg(long, default_value = "auto")]
        mode: String,
        /// Trials for sampled mode
        #[arg(long)]
        trials: Option<u32>,
    },
    /// Chain operations
    Chains {
        #[command(subcommand)]
        action: ChainsAction,
    },
    /// Emit the hub-and-halves geometry on 2n+1 points
    Example2 {
        #[arg(long)]
        n: usize,
        /// Write the geometry JSON here instead of stdout
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The natural-number geometry with lines L_u = {0, u, 2u, ..., u²}
    E1 {
        #[command(subcommand)]
        action: E1Action,
    },
    /// Emit the projective space PG(dim, q)
    Pg {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Polar-space constructions and invariants
    Polar {
        #[command(subcommand)]
        action: PolarAction,
    },
    /// Run a verification suite; exit code 0 iff every check passes
    Verify {
        /// paper | fuzz
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Trials for the fuzz suite
        #[arg(long)]
        trials: Option<u32>,
    },
}

#[derive(Subcommand)]
enum ChainsAction {
    /// Longest chain of subspaces from the empty set to the full point set
    Longest {
        #[command(flatten)]
        source: Source,
    },
    /// Extend a chain (JSON file) to a maximal one
    Extend {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        chain: PathBuf,
    },
    /// Check maximality of a chain (JSON file)
    VerifyMaximal {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        chain: PathBuf,
    },
    /// Multiset of maximal chain lengths
    Lengths {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum E1Action {
    /// Are two distinct naturals collinear?
    Collinear { a: u64, b: u64 },
    /// Budgeted span of a finite set of naturals
    Span { points: Vec<u64> },
    /// Examine the candidate span of {0} ∪ primes up to a bound
    VerifyPrimes {
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
}

#[derive(Args)]
struct PolarSpec {
    /// sp | o-par | o-plus | o-minus
    #[arg(long)]
    kind: String,
    /// Polar rank parameter n
    #[arg(long)]
    rank: usize,
    /// Field order
    #[arg(long)]
    q: usize,
}

impl PolarSpec {
    fn build(&self) -> Result<geom_core::polar::PolarGeometry> {
        let kind = builtins::parse_polar_kind(&self.kind)?;
        geom_core::polar::build_polar(kind, self.rank, self.q).map_err(|e| anyhow!(e))
    }
}

#[derive(Subcommand)]
enum PolarAction {
    /// Build and emit the geometry (plus an embedding sidecar)
    Build {
        #[command(flatten)]
        spec: PolarSpec,
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Write the point-to-vector embedding here
        #[arg(long)]
        embedding_out: Option<PathBuf>,
    },
    /// Polar rank by Witt splitting, greedy chains, or both
    Rank {
        #[command(flatten)]
        spec: PolarSpec,
        /// witt | chain | both
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Corank via chains of nice subspaces or the orthogonal complement
    Corank {
        #[command(flatten)]
        spec: PolarSpec,
        /// chain | perp
        #[arg(long, default_value = "chain")]
        method: String,
    },
    /// Probe faithfulness of the natural embedding
    Faithful {
        #[command(flatten)]
        spec: PolarSpec,
        /// exhaustive | sampled
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long)]
        trials: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            if json {
                println!("{}", json!({"error": err.to_string()}));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::FAILURE
        }
    }
}

fn budget_override(cli_budget: Option<f64>) -> Option<f64> {
    cli_budget.or_else(|| {
        std::env::var("GEOM_BUDGET")
            .ok()
            .and_then(|v| v.parse::<f64>().ok())
    })
}

fn effective_budget(cli_budget: Option<f64>) -> Budget {
    match budget_override(cli_budget) {
        Some(cap) => Budget::with_span_calls(cap as u64),
        None => Budget::default(),
    }
}

fn parse_point_list(text: &str, n_points: usize) -> Result<PointSet> {
    let mut set = PointSet::empty(n_points);
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let p: usize = part
            .parse()
            .with_context(|| format!("invalid point index `{part}`"))?;
        if p >= n_points {
            bail!("point {p} out of range for a geometry with {n_points} points");
        }
        set.insert(p);
    }
    Ok(set)
}

fn emit_or_print(text: &str, emit: &Option<PathBuf>) -> Result<()> {
    match emit {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            Ok(())
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let budget = effective_budget(cli.budget);
    match cli.command {
        Command::Span { source, set } => {
            let g = source.load()?;
            let seed = parse_point_list(&set, g.n_points())?;
            let span = g.span(&seed);
            if cli.json {
                println!("{}", json!({"set": seed.to_vec(), "span": span.to_vec()}));
            } else {
                println!("span{} = {}", seed, span);
            }
        }
        Command::Rank { source } => {
            let g = source.load()?;
            let report = rank::rank_report(&g, &budget);
            if cli.json {
                println!("{}", report.to_json_value());
            } else {
                let show = |v: &rank::RankValue| match v.value() {
                    Some(x) => format!("{x}"),
                    None => format!("{}..{}", v.lower, v.upper),
                };
                println!("rk_gen       = {}", show(&report.rk_gen));
                println!("rk_wo        = {}", show(&report.rk_wo));
                println!(
                    "rk_ind       >= {}{}",
                    report.rk_ind_lower,
                    if report.rk_ind_exact { " (exact)" } else { "" }
                );
                println!("exchange     = {:?}", report.ep.status);
                println!("basis sizes  = {:?}", report.basis_sizes);
            }
        }
        Command::EpCheck {
            source,
            mode,
            trials,
        } => {
            let g = source.load()?;
            let trials = trials.unwrap_or(budget.ep_sample_trials);
            let seed = cli.seed.unwrap_or(budget.ep_sample_seed);
            let mode = match mode.as_str() {
                "exhaustive" => EpMode::Exhaustive,
                "sampled" => EpMode::Sampled { seed, trials },
                "auto" => {
                    if g.n_points() <= budget.ep_max_points_exhaustive {
                        EpMode::Exhaustive
                    } else {
                        EpMode::Sampled { seed, trials }
                    }
                }
                other => bail!("unknown mode `{other}`"),
            };
            let report = g.check_exchange_property(mode, &budget).map_err(|e| anyhow!(e))?;
            if cli.json {
                let witness = report
                    .witness
                    .as_ref()
                    .map(|w| json!({"base": w.base.to_vec(), "x": w.x, "y": w.y}))
                    .unwrap_or(serde_json::Value::Null);
                println!(
                    "{}",
                    json!({
                        "status": serde_json::to_value(report.status)?,
                        "witness": witness,
                        "checks": report.checks_performed,
                    })
                );
            } else {
                println!("status = {:?} after {} checks", report.status, report.checks_performed);
                if let Some(w) = &report.witness {
                    println!("witness: base = {}, x = {}, y = {}", w.base, w.x, w.y);
                    println!("replays: {}", w.replays(&g));
                }
            }
        }
        Command::Chains { action } => return run_chains(action, cli.json, &budget),
        Command::Example2 { n, emit } => {
            let g = gallery::example2(n).map_err(|e| anyhow!(e))?;
            emit_or_print(&g.to_json(), &emit)?;
        }
        Command::E1 { action } => return run_e1(action, cli.json, budget_override(cli.budget)),
        Command::Pg { dim, q, emit } => {
            let g = gallery::projective_space(dim, q).map_err(|e| anyhow!(e))?;
            emit_or_print(&g.to_json(), &emit)?;
        }
        Command::Polar { action } => return run_polar(action, cli.json, cli.seed, &budget),
        Command::Verify { suite, trials } => {
            let cfg = SuiteConfig {
                budget,
                fuzz_seed: cli.seed.unwrap_or(42),
                fuzz_trials: trials.unwrap_or(500),
            };
            let results = match suite.as_str() {
                "paper" => suite::run_paper_suite(&cfg),
                "fuzz" => suite::run_fuzz_suite(&cfg, cfg.fuzz_seed, cfg.fuzz_trials),
                other => bail!("unknown suite `{other}`"),
            };
            let all_pass = results.iter().all(|r| r.passed());
            if cli.json {
                let doc: Vec<_> = results.iter().map(|r| r.to_json_value()).collect();
                println!("{}", json!({"checks": doc, "all_pass": all_pass}));
            } else {
                for r in &results {
                    println!(
                        "{} {}  [{} ms]  expected: {}; got: {}",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.name,
                        r.elapsed.as_millis(),
                        r.expected,
                        r.computed
                    );
                    if !r.passed() {
                        println!("     replay: {}", r.replay);
                    }
                }
                let passed = results.iter().filter(|r| r.passed()).count();
                println!("{passed}/{} checks passed", results.len());
            }
            return Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_chains(action: ChainsAction, json: bool, budget: &Budget) -> Result<ExitCode> {
    match action {
        ChainsAction::Longest { source } => {
            let g = source.load()?;
            let lc = chains::longest_chain(&g, budget);
            if json {
                println!(
                    "{}",
                    json!({
                        "length": lc.length,
                        "exact": lc.exact,
                        "members": lc.witness.members().iter().map(|m| m.to_vec()).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "longest chain length = {}{}",
                    lc.length,
                    if lc.exact { "" } else { " (lower bound)" }
                );
                for m in lc.witness.members() {
                    println!("  {m}");
                }
            }
        }
        ChainsAction::Extend { source, chain } => {
            let g = source.load()?;
            let text = fs::read_to_string(&chain)
                .with_context(|| format!("reading {}", chain.display()))?;
            let c = chains::Chain::from_json(&g, &text).map_err(|e| anyhow!(e))?;
            let extended = chains::extend_to_maximal(&g, &c);
            println!("{}", extended.to_json());
        }
        ChainsAction::VerifyMaximal { source, chain } => {
            let g = source.load()?;
            let text = fs::read_to_string(&chain)
                .with_context(|| format!("reading {}", chain.display()))?;
            let c = chains::Chain::from_json(&g, &text).map_err(|e| anyhow!(e))?;
            let result = chains::is_maximal_chain(&g, &c);
            if json {
                println!(
                    "{}",
                    json!({
                        "maximal": result.maximal,
                        "violation": result.violation.as_ref().map(|v| format!("{v:?}")),
                    })
                );
            } else {
                match result.violation {
                    None => println!("maximal"),
                    Some(v) => println!("not maximal: {v:?}"),
                }
            }
            return Ok(if result.maximal {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
        ChainsAction::Lengths { source } => {
            let g = source.load()?;
            let lengths = chains::maximal_chain_lengths(&g, budget);
            if json {
                let counts: serde_json::Map<String, serde_json::Value> = lengths
                    .counts
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                println!(
                    "{}",
                    json!({"counts": counts, "exhaustive": lengths.exhaustive})
                );
            } else {
                for (len, count) in &lengths.counts {
                    println!("length {len}: {count} maximal chains");
                }
                if !lengths.exhaustive {
                    println!("(partial: budget exceeded)");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_e1(action: E1Action, json: bool, budget: Option<f64>) -> Result<ExitCode> {
    match action {
        E1Action::Collinear { a, b } => {
            let answer = natgeom::collinear(a, b).map_err(|e| anyhow!(e))?;
            let lines = natgeom::lines_through(a, b).map_err(|e| anyhow!(e))?;
            if json {
                println!("{}", json!({"collinear": answer, "lines": lines}));
            } else {
                println!("{answer}");
                if answer {
                    println!("common lines: {lines:?}");
                }
            }
        }
        E1Action::Span { points } => {
            let nat_budget = natgeom::NatBudget {
                max_element: budget.unwrap_or(1_000_000.0) as u64,
                max_rounds: 10_000,
            };
            let result = natgeom::span(&points, &nat_budget);
            let members: Vec<u64> = result.set().iter().copied().collect();
            if json {
                println!(
                    "{}",
                    json!({"converged": result.converged(), "span": members})
                );
            } else {
                println!(
                    "{} ({} elements{})",
                    format_u64_set(&members, 40),
                    members.len(),
                    if result.converged() {
                        ""
                    } else {
                        ", budget exceeded: partial"
                    }
                );
            }
        }
        E1Action::VerifyPrimes { bound } => {
            let report = natgeom::verify_prime_multiples(bound).map_err(|e| anyhow!(e))?;
            if json {
                println!(
                    "{}",
                    json!({
                        "bound": report.bound,
                        "all_pass": report.all_pass(),
                        "closure_violations": report.closure_violations,
                        "generator_violations": report.generator_violations,
                        "reachability_violations": report.reachability_violations,
                        "reabsorption_violations": report.reabsorption_violations,
                    })
                );
            } else {
                println!("bound = {}", report.bound);
                if report.closure_violations.is_empty() {
                    println!("line closure: ok");
                } else {
                    println!(
                        "line closure: {} violations",
                        report.closure_violations.len()
                    );
                    for (u, missing) in &report.closure_violations {
                        println!("  L_{u} meets the set twice but misses {missing:?}");
                    }
                }
                println!(
                    "generators contained: {}",
                    report.generator_violations.is_empty()
                );
                println!(
                    "members reachable:    {}",
                    report.reachability_violations.is_empty()
                );
                println!(
                    "non-members reabsorb: {}",
                    report.reabsorption_violations.is_empty()
                );
            }
            return Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_polar(
    action: PolarAction,
    json: bool,
    seed: Option<u64>,
    _budget: &Budget,
) -> Result<ExitCode> {
    match action {
        PolarAction::Build {
            spec,
            emit,
            embedding_out,
        } => {
            let pg = spec.build()?;
            emit_or_print(&pg.geometry().to_json(), &emit)?;
            if let Some(path) = embedding_out {
                fs::write(&path, pg.embedding_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        PolarAction::Rank { spec, method } => {
            let pg = spec.build()?;
            let values: Vec<(&str, usize)> = match method.as_str() {
                "witt" => vec![("witt", pg.polar_rank(PolarRankMethod::Witt))],
                "chain" => vec![("chain", pg.polar_rank(PolarRankMethod::Chain))],
                "both" => vec![
                    ("witt", pg.polar_rank(PolarRankMethod::Witt)),
                    ("chain", pg.polar_rank(PolarRankMethod::Chain)),
                ],
                other => bail!("unknown method `{other}`"),
            };
            if json {
                let doc: serde_json::Map<String, serde_json::Value> = values
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                println!("{}", serde_json::Value::Object(doc));
            } else {
                for (name, value) in values {
                    println!("{name}: {value}");
                }
            }
        }
        PolarAction::Corank { spec, method } => {
            let pg = spec.build()?;
            let method = match method.as_str() {
                "chain" => CorankMethod::Chain,
                "perp" => CorankMethod::Perp,
                other => bail!("unknown method `{other}`"),
            };
            let report = pg.corank(method, seed).map_err(|e| anyhow!(e))?;
            if json {
                println!("{}", pg.corank_report_json(&report));
            } else {
                println!("corank = {}", report.value);
            }
        }
        PolarAction::Faithful { spec, mode, trials } => {
            let pg = spec.build()?;
            let mode = match mode.as_str() {
                "exhaustive" => FaithfulMode::ExhaustiveMinimal,
                "sampled" => FaithfulMode::Sampled {
                    seed: seed.unwrap_or(7),
                    trials: trials.unwrap_or(50),
                },
                other => bail!("unknown mode `{other}`"),
            };
            let report = pg.check_faithful(mode);
            if json {
                let violations: Vec<_> = report
                    .violations
                    .iter()
                    .map(|v| json!({"nice": v.nice.to_vec(), "pullback": v.pullback.to_vec()}))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "faithful_on_tested": report.faithful_on_tested(),
                        "checked": report.checked,
                        "violations": violations,
                    })
                );
            } else if report.faithful_on_tested() {
                println!(
                    "no violation among {} tested nice subspaces",
                    report.distinct_subspaces
                );
            } else {
                println!("{} violations found, e.g.:", report.violations.len());
                let v = &report.violations[0];
                println!("  nice subspace {} pulls back to {}", v.nice, v.pullback);
            }
            return Ok(if report.faithful_on_tested() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn format_u64_set(members: &[u64], limit: usize) -> String {
    let shown: Vec<String> = members.iter().take(limit).map(|m| m.to_string()).collect();
    if members.len() > limit {
        format!("{{{}, ...}}", shown.join(", "))
    } else {
        format!("{{{}}}", shown.join(", "))
    }
}
