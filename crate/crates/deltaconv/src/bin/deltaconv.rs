//! Command-line front end: hulls, invariants, structure queries, audits,
//! stream scans, and the two generator families.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use deltaconv::generators::{generate, GeneratorSpec};
use deltaconv::graph::{parse_edge_list, to_edge_list, Graph, VertexSet};
use deltaconv::graph6::{encode_graph6, parse_graph6};
use deltaconv::hull::{delta_hull, delta_interval, is_convex};
use deltaconv::numbers::{
    caratheodory_number, caratheodory_number_uncapped, helly_number, radon_number, rank,
    InvariantValue,
};
use deltaconv::scan::{
    audit_graph, emit_report, scan_stream, AuditCaps, OutputFormat, ReportPayload, ScanOptions,
    CHECK_NAMES,
};

#[derive(Parser)]
#[command(
    name = "deltaconv",
    about = "Exact Delta-convexity invariants on small graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    /// graph6 line
    G6,
    /// edge-list text
    El,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Graph6,
    El,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or `-` for standard input
    #[arg(long, value_name = "PATH")]
    graph: String,
    /// Input format; auto-detected when omitted (graph6 if the first line
    /// decodes, else edge list)
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

#[derive(Args)]
struct SetArg {
    /// Comma-separated vertex ids, e.g. `0,1,4`
    #[arg(long, value_name = "IDS")]
    set: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantKind {
    Helly,
    Radon,
    Cara,
    Rank,
    Alpha,
}

#[derive(Subcommand)]
enum Command {
    /// Convex hull of a vertex set (iterated closure)
    Hull {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        set: SetArg,
        /// Print every closure round, not just the result
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// One closure step of the interval operator
    Interval {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        set: SetArg,
        #[arg(long)]
        json: bool,
    },
    /// Is the set convex?
    Convex {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        set: SetArg,
    },
    /// Exact invariant value with a witness set
    Invariant {
        #[arg(value_enum)]
        kind: InvariantKind,
        #[command(flatten)]
        input: GraphInput,
        /// Lift the Caratheodory search size cap
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Full single-graph report: invariants, closed forms, checks
    Audit {
        #[command(flatten)]
        input: GraphInput,
        /// Override both audit size caps
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
        /// Audit regardless of size caps
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Audit a newline-delimited graph6 stream
    Scan {
        /// Stream file, or `-` for standard input
        #[arg(long, value_name = "PATH", default_value = "-")]
        graph: String,
        /// Override both audit size caps
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
        #[arg(long)]
        force: bool,
        /// Comma-separated checks to evaluate (default: all)
        #[arg(long, value_name = "LIST")]
        check: Option<String>,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Emit every report, not only the failing ones
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Generate a member of one of the two built-in families
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Block decomposition and cut vertices
    Blocks {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Chordality with a certificate either way
    Chordal {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Triangle fan whose Helly, Radon, and rank values equal `n`
    Fan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GenFormat,
    },
    /// Chain of `k` triangles joined apex-to-apex by paths
    Chain {
        #[arg(long)]
        k: usize,
        /// Comma-separated internal path lengths (k-1 entries)
        #[arg(long, value_name = "LENS", default_value = "")]
        paths: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GenFormat,
    },
}

fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, String> {
    let text = read_source(&input.graph)?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let format = match input.format {
        Some(f) => f,
        None => {
            if parse_graph6(first).is_ok() {
                InputFormat::G6
            } else {
                InputFormat::El
            }
        }
    };
    match format {
        InputFormat::G6 => parse_graph6(first).map_err(|e| format!("graph6: {e}")),
        InputFormat::El => parse_edge_list(&text).map_err(|e| format!("edge list: {e}")),
    }
}

fn parse_set(spec: &str, g: &Graph) -> Result<VertexSet, String> {
    let mut ids = Vec::new();
    for tok in spec.split(',').filter(|t| !t.trim().is_empty()) {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| format!("malformed vertex id {tok:?}"))?;
        ids.push(v);
    }
    VertexSet::from_ids(ids, g.vertex_count()).map_err(|e| e.to_string())
}

fn json_ids(s: VertexSet) -> serde_json::Value {
    serde_json::Value::Array(s.iter().map(|v| serde_json::json!(v)).collect())
}

fn print_invariant(value: &InvariantValue, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::json!({"value": value.value, "witness": json_ids(value.witness)})
        );
    } else {
        println!("{}", value.value);
        println!("witness: {}", value.witness);
    }
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Hull {
            input,
            set,
            trace,
            json,
        } => {
            let g = load_graph(&input)?;
            let s = parse_set(&set.set, &g)?;
            let hull = delta_hull(&g, s);
            if json {
                let rounds: Vec<serde_json::Value> =
                    hull.rounds().iter().map(|r| json_ids(*r)).collect();
                println!(
                    "{}",
                    serde_json::json!({"rounds": rounds, "final": json_ids(hull.final_set())})
                );
            } else if trace {
                for (i, round) in hull.rounds().iter().enumerate() {
                    println!("round {i}: {round}");
                }
                println!("{}", hull.final_set());
            } else {
                println!("{}", hull.final_set());
            }
        }
        Command::Interval { input, set, json } => {
            let g = load_graph(&input)?;
            let s = parse_set(&set.set, &g)?;
            let out = delta_interval(&g, s);
            if json {
                println!("{}", serde_json::json!({"interval": json_ids(out)}));
            } else {
                println!("{out}");
            }
        }
        Command::Convex { input, set } => {
            let g = load_graph(&input)?;
            let s = parse_set(&set.set, &g)?;
            println!("{}", is_convex(&g, s));
        }
        Command::Invariant {
            kind,
            input,
            force,
            json,
        } => {
            let g = load_graph(&input)?;
            let value = match kind {
                InvariantKind::Helly => helly_number(&g).map_err(|e| e.to_string())?,
                InvariantKind::Radon => radon_number(&g).map_err(|e| e.to_string())?,
                InvariantKind::Rank => rank(&g).map_err(|e| e.to_string())?,
                InvariantKind::Alpha => deltaconv::independence_number(&g),
                InvariantKind::Cara => if force {
                    caratheodory_number_uncapped(&g)
                } else {
                    caratheodory_number(&g)
                }
                .map_err(|e| e.to_string())?,
            };
            print_invariant(&value, json);
        }
        Command::Audit {
            input,
            cap,
            force,
            json,
            csv,
        } => {
            let g = load_graph(&input)?;
            let caps = caps_with(cap, force);
            let report = audit_graph(&g, 0, &caps).map_err(|e| e.to_string())?;
            if csv {
                print!("{}", emit_report(ReportPayload::Single(&report), OutputFormat::Csv));
            } else if json {
                println!("{}", emit_report(ReportPayload::Single(&report), OutputFormat::Json));
            } else {
                print_human_report(&report);
            }
        }
        Command::Scan {
            graph,
            cap,
            force,
            check,
            jobs,
            all,
            json: _,
            csv,
        } => {
            let text = read_source(&graph)?;
            let selected = match check {
                None => None,
                Some(list) => {
                    let names: Vec<String> = list
                        .split(',')
                        .map(|t| t.trim().to_string())
                        .filter(|t| !t.is_empty())
                        .collect();
                    for n in &names {
                        if !CHECK_NAMES.contains(&n.as_str()) {
                            return Err(format!(
                                "unknown check {n:?}; known: {}",
                                CHECK_NAMES.join(", ")
                            ));
                        }
                    }
                    Some(names)
                }
            };
            let options = ScanOptions {
                caps: caps_with(cap, force),
                selected_checks: selected,
                jobs,
                keep_all: all,
            };
            let summary =
                scan_stream(io::Cursor::new(text), &options).map_err(|e| e.to_string())?;
            let format = if csv { OutputFormat::Csv } else { OutputFormat::Json };
            match format {
                OutputFormat::Csv => {
                    print!("{}", emit_report(ReportPayload::Summary(&summary), format))
                }
                OutputFormat::Json => {
                    println!("{}", emit_report(ReportPayload::Summary(&summary), format))
                }
            }
            eprintln!(
                "scanned {} lines: {} audited, {} skipped",
                summary.total,
                summary.audited,
                summary.skipped.len()
            );
            for (name, count) in &summary.failure_counts {
                if *count > 0 {
                    eprintln!("  {name}: {count} failure(s)");
                }
            }
            if summary.failures_total() > 0 {
                return Ok(1);
            }
        }
        Command::Gen { family } => {
            let (spec, format) = match family {
                GenFamily::Fan { n, format } => (GeneratorSpec::triangle_fan(n), format),
                GenFamily::Chain { k, paths, format } => {
                    let lens: Result<Vec<usize>, _> = paths
                        .split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| t.trim().parse::<usize>())
                        .collect();
                    let lens = lens.map_err(|_| format!("malformed path lengths {paths:?}"))?;
                    (GeneratorSpec::triangle_chain(k, lens), format)
                }
            };
            let generated = generate(&spec).map_err(|e| e.to_string())?;
            match format {
                GenFormat::Graph6 => {
                    println!("{}", encode_graph6(&generated.graph).map_err(|e| e.to_string())?)
                }
                GenFormat::El => {
                    print!("{}", to_edge_list(&generated.graph));
                    for (v, role) in generated.roles.iter().enumerate() {
                        println!("# vertex {v} = {role}");
                    }
                }
            }
        }
        Command::Blocks { input, json } => {
            let g = load_graph(&input)?;
            let d = deltaconv::block_decomposition(&g).map_err(|e| e.to_string())?;
            if json {
                let blocks: Vec<serde_json::Value> =
                    d.blocks.iter().map(|b| json_ids(*b)).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "blocks": blocks,
                        "cut_vertices": json_ids(d.cut_vertices),
                    })
                );
            } else {
                println!("blocks: {}", d.block_count());
                for (i, b) in d.blocks.iter().enumerate() {
                    println!("block {i}: {b}");
                }
                println!("cut vertices: {}", d.cut_vertices);
            }
        }
        Command::Chordal { input, json } => {
            let g = load_graph(&input)?;
            match deltaconv::check_chordal(&g) {
                deltaconv::Chordality::Chordal { elimination_order } => {
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({"chordal": true, "elimination_order": elimination_order})
                        );
                    } else {
                        println!("chordal");
                        let order: Vec<String> =
                            elimination_order.iter().map(|v| v.to_string()).collect();
                        println!("elimination order: {}", order.join(" "));
                    }
                }
                deltaconv::Chordality::NotChordal { chordless_cycle } => {
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({"chordal": false, "chordless_cycle": chordless_cycle})
                        );
                    } else {
                        println!("not chordal");
                        let cycle: Vec<String> =
                            chordless_cycle.iter().map(|v| v.to_string()).collect();
                        println!("chordless cycle: {}", cycle.join(" "));
                    }
                }
            }
        }
    }
    Ok(0)
}

fn caps_with(cap: Option<usize>, force: bool) -> AuditCaps {
    let mut caps = AuditCaps::default();
    if let Some(n) = cap {
        caps.full_max = n;
        caps.hrd_max = n;
    }
    caps.force = force;
    caps
}

fn print_human_report(report: &deltaconv::InvariantReport) {
    println!(
        "graph {} (n={}, edges={}, triangles={}, off-triangle={})",
        report.graph6, report.n, report.edge_count, report.triangle_count, report.off_triangle_count
    );
    println!("alpha = {}  witness: {}", report.alpha, report.witnesses.alpha);
    println!("h     = {}  witness: {}", report.h, report.witnesses.helly);
    println!("r     = {}  witness: {}", report.r, report.witnesses.radon);
    match (report.c, &report.witnesses.caratheodory) {
        (Some(c), Some(w)) => println!("c     = {c}  witness: {w}"),
        _ => println!("c     = (not computed at this size)"),
    }
    println!("d     = {}  witness: {}", report.d, report.witnesses.rank);
    if let Some(cf) = &report.closed_form {
        let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        println!(
            "closed forms: h={} r={} d={} (complete blocks: {}, non-complete: {})",
            show(cf.h_closed),
            show(cf.r_closed),
            show(cf.d_closed),
            cf.complete_blocks,
            cf.noncomplete_blocks
        );
    } else {
        println!("closed forms: not applicable");
    }
    print!("checks:");
    for name in CHECK_NAMES {
        let outcome = report.checks.get(name).expect("known check");
        print!(" {name}={}", outcome.as_str());
    }
    println!();
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
