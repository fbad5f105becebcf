//! `netop`: compose networks through operad operations, normalize graph
//! product words, run Petri nets, and execute the law suites.

mod check;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use netop_core::green::{parse_word, word_to_text, CommutationGraph, KneserSpec, Variety};
use netop_core::model::to_dot;
use netop_core::monoid::MonoidSpec;
use netop_petri::net::{net_to_dot, parse_petri, reachability_to_dot};

use crate::check::{run_check, Suite};
use crate::scenario::{Evaluated, Scenario};

#[derive(Parser)]
#[command(
    name = "netop",
    about = "Network models, network operads, graph products, and Petri nets with catalysts",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReachFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarietyArg {
    Mon,
    #[value(name = "cmon", alias = "c-mon")]
    CMon,
    #[value(name = "gmon", alias = "g-mon")]
    GMon,
}

impl From<VarietyArg> for Variety {
    fn from(v: VarietyArg) -> Variety {
        match v {
            VarietyArg::Mon => Variety::Mon,
            VarietyArg::CMon => Variety::CMon,
            VarietyArg::GMon => Variety::GMon,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the composition tree of a scenario file
    Compose {
        /// Path to a scenario JSON file
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
    },
    /// Normalize a word over a commutation graph; exits 0 iff the input was
    /// already in normal form
    Normalize {
        /// The word, e.g. "e12 e34" or "c1:2 c2"
        word: String,
        /// "kneser:N" or "explicit:V:1-2,2-3" (component indices 1-indexed)
        #[arg(long, default_value = "kneser:4")]
        graph: String,
        /// bool | nat-add | nat-max | trunc-add:K | free
        #[arg(long, default_value = "bool")]
        monoid: String,
        #[arg(long, value_enum, default_value_t = VarietyArg::Mon)]
        variety: VarietyArg,
    },
    /// Load a .petri file and fire, explore, or inspect it
    Petri {
        /// Path to a .petri file
        file: PathBuf,
        #[command(subcommand)]
        cmd: PetriCmd,
    },
    /// Run the randomized law suites
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for all randomized suites (overrides NETOP_SEED; default 0)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 500)]
        cases: usize,
        /// Deliberately corrupt a law to exercise the checker (see
        /// check::FAULTS)
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

#[derive(Subcommand)]
enum PetriCmd {
    /// Fire one transition at a marking
    Fire {
        #[arg(long)]
        marking: String,
        /// Transition name, e.g. tau1
        transition: String,
    },
    /// Breadth-first reachable markings
    Reach {
        #[arg(long)]
        marking: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Cap on the number of distinct markings explored
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = ReachFormat::Text)]
        out: ReachFormat,
    },
    /// List the catalyst species
    Catalysts,
    /// Render the net as DOT
    Show,
}

fn parse_monoid(text: &str) -> Result<MonoidSpec, String> {
    match text {
        "bool" | "bool-or" => Ok(MonoidSpec::BoolOr),
        "nat-add" => Ok(MonoidSpec::NatAdd),
        "nat-max" => Ok(MonoidSpec::NatMax),
        "free" | "free-one-gen" => Ok(MonoidSpec::FreeOneGen),
        other => match other.strip_prefix("trunc-add:") {
            Some(k) => k
                .parse()
                .map(|k| MonoidSpec::TruncAdd { k })
                .map_err(|_| format!("bad truncation bound in {other:?}")),
            None => Err(format!(
                "unknown monoid {other:?} (bool, nat-add, nat-max, trunc-add:K, free)"
            )),
        },
    }
}

fn parse_graph_arg(text: &str) -> Result<(Arc<CommutationGraph>, Option<KneserSpec>), String> {
    if let Some(n) = text.strip_prefix("kneser:") {
        let n: usize = n
            .parse()
            .map_err(|_| format!("bad vertex count in {text:?}"))?;
        let kneser = KneserSpec::new(n, 2).map_err(|e| e.to_string())?;
        return Ok((Arc::new(kneser.graph()), Some(kneser)));
    }
    if let Some(rest) = text.strip_prefix("explicit:") {
        let (count_text, edges_text) = match rest.split_once(':') {
            Some((c, e)) => (c, e),
            None => (rest, ""),
        };
        let count: usize = count_text
            .parse()
            .map_err(|_| format!("bad component count in {text:?}"))?;
        let mut edges = Vec::new();
        for pair in edges_text.split(',').filter(|p| !p.is_empty()) {
            let (u, v) = pair
                .split_once('-')
                .ok_or_else(|| format!("bad edge {pair:?}"))?;
            let u: usize = u.parse().map_err(|_| format!("bad edge {pair:?}"))?;
            let v: usize = v.parse().map_err(|_| format!("bad edge {pair:?}"))?;
            if u == 0 || v == 0 {
                return Err("components are 1-indexed".to_string());
            }
            edges.push((u - 1, v - 1));
        }
        let graph = CommutationGraph::new(count, &edges).map_err(|e| e.to_string())?;
        return Ok((Arc::new(graph), None));
    }
    Err(format!(
        "unknown graph {text:?} (kneser:N or explicit:V:1-2,...)"
    ))
}

fn resolve_seed(cli_seed: Option<u64>) -> u64 {
    if let Some(seed) = cli_seed {
        return seed;
    }
    if let Ok(text) = std::env::var("NETOP_SEED") {
        if let Ok(seed) = text.parse() {
            return seed;
        }
    }
    0
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Compose { scenario, out } => {
            let text = std::fs::read_to_string(&scenario)
                .map_err(|e| format!("cannot read {}: {e}", scenario.display()))?;
            let parsed: Scenario =
                serde_json::from_str(&text).map_err(|e| format!("scenario parse error: {e}"))?;
            let result = parsed.evaluate()?;
            match out {
                OutFormat::Json => {
                    let json = match &result {
                        Evaluated::Plain(net) => serde_json::to_string_pretty(net),
                        Evaluated::Attributed(a) => serde_json::to_string_pretty(a),
                    }
                    .map_err(|e| e.to_string())?;
                    println!("{json}");
                }
                OutFormat::Dot => {
                    let dot = to_dot(result.network()).map_err(|e| e.to_string())?;
                    print!("{dot}");
                }
            }
            Ok(0)
        }
        Command::Normalize {
            word,
            graph,
            monoid,
            variety,
        } => {
            let monoid = parse_monoid(&monoid)?;
            let (graph, kneser) = parse_graph_arg(&graph)?;
            let parsed =
                parse_word(&word, graph, kneser.as_ref(), &monoid).map_err(|e| e.to_string())?;
            let normal = parsed
                .normal_form_in(variety.into())
                .map_err(|e| e.to_string())?;
            println!("{}", word_to_text(&normal, kneser.as_ref()));
            Ok(if normal.letters() == parsed.letters() {
                0
            } else {
                1
            })
        }
        Command::Petri { file, cmd } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
            let (net, _declared) = parse_petri(&text).map_err(|e| e.to_string())?;
            match cmd {
                PetriCmd::Fire {
                    marking,
                    transition,
                } => {
                    let m = net.parse_marking(&marking).map_err(|e| e.to_string())?;
                    let t = net
                        .transition_index(&transition)
                        .ok_or_else(|| format!("unknown transition {transition:?}"))?;
                    let after = net.fire(&m, t).map_err(|e| e.to_string())?;
                    println!("{}", net.marking_to_text(&after));
                    Ok(0)
                }
                PetriCmd::Reach {
                    marking,
                    depth,
                    cap,
                    out,
                } => {
                    let m = net.parse_marking(&marking).map_err(|e| e.to_string())?;
                    let reach = net.reachable(&m, depth, cap).map_err(|e| e.to_string())?;
                    match out {
                        ReachFormat::Text => {
                            for r in &reach {
                                println!("{}", net.marking_to_text(r));
                            }
                        }
                        ReachFormat::Json => {
                            let rows: Vec<String> =
                                reach.iter().map(|r| net.marking_to_text(r)).collect();
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&serde_json::json!({
                                    "start": net.marking_to_text(&m),
                                    "depth": depth,
                                    "markings": rows,
                                }))
                                .map_err(|e| e.to_string())?
                            );
                        }
                        ReachFormat::Dot => print!("{}", reachability_to_dot(&net, &reach)),
                    }
                    Ok(0)
                }
                PetriCmd::Catalysts => {
                    let names: Vec<&str> = net
                        .catalysts()
                        .iter()
                        .map(|&s| net.species()[s].as_str())
                        .collect();
                    println!("{}", names.join(" "));
                    Ok(0)
                }
                PetriCmd::Show => {
                    print!("{}", net_to_dot(&net));
                    Ok(0)
                }
            }
        }
        Command::Check {
            suite,
            seed,
            cases,
            inject_fault,
        } => {
            if let Some(fault) = &inject_fault {
                if !check::FAULTS.contains(&fault.as_str()) {
                    return Err(format!(
                        "unknown fault {fault:?} (known: {:?})",
                        check::FAULTS
                    ));
                }
            }
            let seed = resolve_seed(seed);
            let outcome = run_check(suite, seed, cases, inject_fault.as_deref());
            for line in &outcome.lines {
                println!("{line}");
            }
            Ok(if outcome.failed == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
