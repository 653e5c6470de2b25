//! `dramsey`: formulas, witnesses and exhaustive checks for defective Ramsey numbers.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use defective_ramsey::classes::{self, GraphClass};
use defective_ramsey::constructions::witness_for;
use defective_ramsey::enumerate::{self, BUDGET_ENV};
use defective_ramsey::formulas::{cg_inequality, defective_ramsey, Inequality, RamseyQuery};
use defective_ramsey::hunt::{hunt_witness, HuntConfig};
use defective_ramsey::sets::{alpha_k, ramsey_check};
use defective_ramsey::{graph6, Graph, VertexSet};

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "dramsey", version, about = "Defective Ramsey numbers on forests, cacti, bipartite, split graphs and cographs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,

    /// Largest order the enumerator may visit.
    #[arg(long, global = true, env = BUDGET_ENV, value_parser = clap::value_parser!(u64).range(1..=64))]
    max_order: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Cell {
    /// Defect k.
    #[arg(short = 'k', default_value_t = 1)]
    k: usize,
    /// Size of the dense side.
    #[arg(short = 'i')]
    i: usize,
    /// Size of the sparse side.
    #[arg(short = 'j')]
    j: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form value of R_k(i, j) with the rule used.
    Formula {
        class: GraphClass,
        #[command(flatten)]
        cell: Cell,
    },
    /// Largest k-sparse (or, with --dense, k-dense) set of each input graph.
    Alpha {
        #[arg(short = 'k', default_value_t = 1)]
        k: usize,
        #[arg(long)]
        dense: bool,
        /// A graph6 string or a file of graph6 lines.
        graph: String,
    },
    /// Look for a k-dense i-set or a k-sparse j-set in each input graph.
    Check {
        #[command(flatten)]
        cell: Cell,
        graph: String,
    },
    /// Build and validate an extremal graph on R - 1 vertices.
    Witness {
        class: GraphClass,
        #[command(flatten)]
        cell: Cell,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every member of a class of order n up to isomorphism, as graph6.
    Enumerate {
        class: GraphClass,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Confirm a claimed value by enumerating orders claimed and claimed - 1.
    Verify {
        class: GraphClass,
        #[command(flatten)]
        cell: Cell,
        #[arg(long)]
        claimed: usize,
    },
    /// Simulated-annealing search for a graph of order n with neither set.
    Hunt {
        class: GraphClass,
        #[command(flatten)]
        cell: Cell,
        #[arg(short = 'n')]
        n: usize,
        /// Total proposed moves.
        #[arg(long, default_value_t = HuntConfig::default().moves)]
        budget: u64,
        #[arg(long, default_value_t = HuntConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = HuntConfig::default().restarts)]
        restarts: u32,
    },
    /// Report class membership and certificates for a graph.
    Classify { graph: String },
    /// Compare R_k(k+i, k+j) - k with R_0(i, j) on a class.
    CgCheck {
        class: GraphClass,
        #[command(flatten)]
        cell: Cell,
    },
}

/// A failure carrying the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

fn refused(message: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_REFUSED, message: message.to_string() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(m) = cli.max_order {
        std::env::set_var(BUDGET_ENV, m.to_string());
    }
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn query(class: GraphClass, cell: Cell) -> Result<RamseyQuery, Failure> {
    RamseyQuery::new(class, cell.k, cell.i, cell.j).map_err(usage)
}

/// A graph6 string, or a path to a file holding graph6 lines.
fn read_graphs(arg: &str) -> Result<Vec<Graph>, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("{arg}: {e}")))?;
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(n, l)| graph6::decode(l).map_err(|e| usage(format!("{arg}:{}: {e}", n + 1))))
            .collect()
    } else {
        Ok(vec![graph6::decode(arg).map_err(usage)?])
    }
}

fn write_lines(out: Option<&Path>, lines: &[String]) -> Result<(), Failure> {
    let mut text = lines.join("\n");
    if !lines.is_empty() {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(usage),
    }
}

fn encode(g: &Graph) -> Result<String, Failure> {
    graph6::encode(g).map_err(refused)
}

fn print_json(value: serde_json::Value) {
    println!("{value}");
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Formula { class, cell } => {
            let value = defective_ramsey(query(*class, *cell)?);
            if cli.json {
                print_json(serde_json::to_value(value).expect("serializable"));
            } else {
                println!("{value}");
            }
            Ok(EXIT_OK)
        }
        Command::Alpha { k, dense, graph } => {
            for g in read_graphs(graph)? {
                let target = if *dense { g.complement() } else { g.clone() };
                let (size, set) = alpha_k(&target, *k);
                if cli.json {
                    print_json(json!({ "order": g.order(), "k": k, "dense": dense, "size": size, "set": set.to_vec() }));
                } else {
                    println!("{size} {set}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check { cell, graph } => {
            if cell.i == 0 || cell.j == 0 {
                return Err(usage("set sizes must be at least 1"));
            }
            let mut all_hit = true;
            for g in read_graphs(graph)? {
                let r = ramsey_check(&g, cell.k, cell.i, cell.j);
                all_hit &= !r.is_avoiding();
                if cli.json {
                    print_json(json!({
                        "has_dense": r.has_dense,
                        "has_sparse": r.has_sparse,
                        "witnesses": {
                            "dense": r.dense_witness.map(VertexSet::to_vec),
                            "sparse": r.sparse_witness.map(VertexSet::to_vec),
                        },
                    }));
                } else {
                    match (r.dense_witness, r.sparse_witness) {
                        (None, None) => println!("neither"),
                        (d, s) => {
                            let mut parts = Vec::new();
                            if let Some(d) = d {
                                parts.push(format!("dense witness {d}"));
                            }
                            if let Some(s) = s {
                                parts.push(format!("sparse witness {s}"));
                            }
                            println!("{}", parts.join("; "));
                        }
                    }
                }
            }
            // 1 when some input has neither set
            Ok(if all_hit { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Witness { class, cell, out } => {
            let q = query(*class, *cell)?;
            match witness_for(q) {
                Ok(Some(g)) => {
                    let line = encode(&g)?;
                    if cli.json && out.is_none() {
                        print_json(json!({ "query": q, "order": g.order(), "graph6": line }));
                    } else {
                        write_lines(out.as_deref(), &[line])?;
                    }
                    Ok(EXIT_OK)
                }
                Ok(None) => Err(refused(format!("no construction for {q} ({})", defective_ramsey(q)))),
                Err(e) => Err(Failure { code: EXIT_REFUTED, message: e.to_string() }),
            }
        }
        Command::Enumerate { class, n, out } => {
            let graphs = enumerate::enumerate_class(*class, *n).map_err(refused)?;
            let lines = graphs.iter().map(encode).collect::<Result<Vec<_>, _>>()?;
            if cli.json && out.is_none() {
                print_json(json!({ "class": class, "order": n, "count": graphs.len(), "graphs": lines }));
            } else {
                write_lines(out.as_deref(), &lines)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { class, cell, claimed } => {
            query(*class, *cell)?;
            let report = enumerate::verify_value(*class, cell.k, cell.i, cell.j, *claimed).map_err(refused)?;
            if cli.json {
                print_json(serde_json::to_value(&report).expect("serializable"));
            } else {
                let verdict = if report.confirmed { "confirmed" } else { "not confirmed" };
                println!(
                    "{verdict}: R_{}^{}({}, {}) = {claimed}; {} graphs at order {claimed} ({} counterexamples), {} at order {}; {} ms",
                    cell.k,
                    class,
                    cell.i,
                    cell.j,
                    report.examined,
                    report.counterexamples.len(),
                    report.examined_below,
                    claimed.saturating_sub(1),
                    report.elapsed_ms,
                );
                for c in &report.counterexamples {
                    println!("counterexample {c}");
                }
                if let Some(w) = &report.lower_witness {
                    println!("lower witness {w}");
                }
            }
            Ok(if report.confirmed { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Hunt { class, cell, n, budget, seed, restarts } => {
            query(*class, *cell)?;
            if *n > defective_ramsey::graph::MAX_ORDER {
                return Err(refused(format!("order {n} exceeds 64")));
            }
            let cfg = HuntConfig { moves: *budget, seed: *seed, restarts: *restarts };
            let found = hunt_witness(*class, cell.k, cell.i, cell.j, *n, &cfg);
            let line = found.as_ref().map(encode).transpose()?;
            if cli.json {
                print_json(json!({ "found": line.is_some(), "graph6": line }));
            } else {
                match &line {
                    Some(l) => println!("{l}"),
                    None => println!("no witness found"),
                }
            }
            Ok(if line.is_some() { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Classify { graph } => {
            for g in read_graphs(graph)? {
                let mut memberships = serde_json::Map::new();
                for c in GraphClass::RESTRICTED {
                    memberships.insert(c.name().to_string(), json!(classes::member(&g, c)));
                }
                let bip = classes::bipartition(&g);
                let split = classes::split_partition(&g);
                if cli.json {
                    print_json(json!({
                        "order": g.order(),
                        "edges": g.edge_count(),
                        "classes": memberships,
                        "bipartition": bip.map(|(a, b)| [a.to_vec(), b.to_vec()]),
                        "split_partition": split.map(|(k, i)| [k.to_vec(), i.to_vec()]),
                    }));
                } else {
                    let names: Vec<&str> = GraphClass::RESTRICTED
                        .into_iter()
                        .filter(|&c| classes::member(&g, c))
                        .map(GraphClass::name)
                        .collect();
                    let names = if names.is_empty() { "none".to_string() } else { names.join(" ") };
                    println!("order {} edges {}: {names}", g.order(), g.edge_count());
                    if let Some((a, b)) = bip {
                        println!("bipartition {a} {b}");
                    }
                    if let Some((k, i)) = split {
                        println!("split partition K={k} I={i}");
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::CgCheck { class, cell } => {
            let verdict = cg_inequality(*class, cell.k, cell.i, cell.j).map_err(usage)?;
            let word = match verdict {
                Inequality::Holds => "holds",
                Inequality::Fails => "fails",
                Inequality::Undecidable => "undecidable",
            };
            if cli.json {
                print_json(json!({ "result": verdict }));
            } else {
                println!("{word}");
            }
            Ok(match verdict {
                Inequality::Holds => EXIT_OK,
                Inequality::Fails => EXIT_REFUTED,
                Inequality::Undecidable => EXIT_REFUSED,
            })
        }
    }
}
