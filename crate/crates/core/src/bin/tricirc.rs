//! Command-line driver. Exit codes: 0 success, 1 anomaly / negative answer,
//! 2 usage error, 3 I/O error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tricirc::families::{self, FamilyParams, TricirculantType};
use tricirc::graph::SimpleGraph;
use tricirc::io;
use tricirc::symmetry::{self, SymmetryError};
use tricirc::verify::{self, Report};
use tricirc::voltage::quotient;

#[derive(Parser)]
#[command(name = "tricirc", version, about = "Cubic tricirculants: families, symmetry and classification sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family graph.
    Gen {
        /// 1-4, x, y, prism, moebius or gp; prism, moebius and gp(r) have
        /// order 6k like the families.
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 0)]
        r: u64,
        #[arg(long, default_value_t = 0)]
        s: u64,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Symmetry and cycle analysis of a graph (graph6 or edge list) as JSON.
    Analyze {
        /// Path, or `-` for stdin.
        file: String,
        /// Largest cycle length for signatures (default: girth + 2).
        #[arg(long)]
        cycles: Option<usize>,
    },
    /// Net-voltage table of reduced closed walks in a catalogue pregraph.
    Walks {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        length: usize,
    },
    /// Classification sweep over all types; exit 1 on any anomaly.
    Verify {
        #[arg(long, default_value_t = 9)]
        kmin: u64,
        #[arg(long)]
        kmax: u64,
        /// Also run the census of orders up to 48.
        #[arg(long)]
        census: bool,
        /// Also run the lemma spot checks over the same k range.
        #[arg(long)]
        lemmas: bool,
    },
    /// Exit 0 iff the two graphs are isomorphic.
    Iso { a: String, b: String },
    /// Quotient by a semiregular automorphism with orbits of size N.
    Quotient {
        file: String,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Edges,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    Ok(text)
}

fn load(path: &str) -> Result<SimpleGraph, Failure> {
    let text = read_source(path)?;
    io::read_graph(&text).map_err(|e| Failure::Io(format!("{path}: {e}")))
}

fn generate(ty: &str, k: u64, r: u64, s: u64) -> Result<SimpleGraph, Failure> {
    Ok(match ty {
        "x" => families::x_graph(k)?,
        "y" => families::y_graph(k)?,
        "prism" => families::prism(3 * k)?,
        "moebius" => families::moebius(3 * k)?,
        "gp" => families::gp(3 * k, r)?,
        other => {
            let ty = other
                .parse()
                .ok()
                .and_then(TricirculantType::from_index)
                .ok_or_else(|| Failure::Usage(format!("unknown type '{other}'")))?;
            families::build(FamilyParams::new(ty, k, r, s)?)?.graph
        }
    })
}

#[derive(Serialize)]
struct Analysis {
    vertices: usize,
    edges: usize,
    cubic: bool,
    connected: bool,
    bipartite: bool,
    girth: Option<usize>,
    signatures: Vec<SignatureSummary>,
    aut_order: Option<String>,
    vertex_orbits: usize,
    edge_orbits: usize,
    vertex_transitive: bool,
    arc_transitive: bool,
    /// For m = 1, 2, 3: whether a semiregular automorphism with m orbits
    /// exists (`null` when the group is too large to enumerate).
    k_circulant: Vec<(usize, Option<bool>)>,
}

#[derive(Serialize)]
struct SignatureSummary {
    c: usize,
    distinct: Vec<String>,
}

fn analyze(g: &SimpleGraph, cmax: Option<usize>) -> Result<Analysis, Failure> {
    let group = symmetry::automorphism_group(g)?;
    let girth = symmetry::girth(g);
    let mut signatures = Vec::new();
    if let (true, Some(gi)) = (g.is_cubic(), girth) {
        for c in gi..=cmax.unwrap_or(gi + 2) {
            let mut distinct: Vec<_> = symmetry::signatures(g, c)?.into_iter().collect();
            distinct.sort();
            distinct.dedup();
            signatures.push(SignatureSummary { c, distinct: distinct.iter().map(|s| s.to_string()).collect() });
        }
    }
    let mut k_circulant = Vec::new();
    for m in 1..=3 {
        let found = match symmetry::find_k_circulant(g, m) {
            Ok(p) => Some(p.is_some()),
            Err(SymmetryError::GroupTooLarge { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        k_circulant.push((m, found));
    }
    Ok(Analysis {
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        cubic: g.is_cubic(),
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        girth,
        signatures,
        aut_order: group.order().map(|o| o.to_string()),
        vertex_orbits: group.vertex_orbits().len(),
        edge_orbits: group.edge_orbits(g).len(),
        vertex_transitive: group.is_vertex_transitive(),
        arc_transitive: group.is_arc_transitive(g),
        k_circulant,
    })
}

fn print_walks(delta: usize, length: usize) -> Result<(), Failure> {
    let p = tricirc::pregraph::delta(delta)?;
    let tables = (0..p.num_vertices()).map(|v| verify::walk_table(delta, length, v)).collect::<Result<Vec<_>, _>>()?;
    let mut classes: Vec<_> = tables.iter().flat_map(|t| t.classes().map(|(v, _)| v)).collect();
    classes.sort_by_key(|v| (!v.is_zero(), std::cmp::Reverse(*v)));
    classes.dedup();
    print!("{:<16}", "voltage");
    for t in &tables {
        print!("{:>6}", t.start);
    }
    println!();
    for v in classes {
        let label = if v.is_zero() { "0".to_string() } else { format!("±({v})") };
        print!("{label:<16}");
        for t in &tables {
            print!("{:>6}", t.count(v));
        }
        println!();
    }
    print!("{:<16}", "total");
    for t in &tables {
        print!("{:>6}", t.total);
    }
    println!();
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Gen { ty, k, r, s, format } => {
            let g = generate(&ty, k, r, s)?;
            match format {
                Format::Graph6 => println!("{}", io::encode_graph6(&g)),
                Format::Dot => print!("{}", io::to_dot(&g)),
                Format::Edges => print!("{}", io::to_edge_list(&g)),
            }
        }
        Command::Analyze { file, cycles } => {
            let g = load(&file)?;
            println!("{}", serde_json::to_string_pretty(&analyze(&g, cycles)?)?);
        }
        Command::Walks { delta, length } => print_walks(delta, length)?,
        Command::Verify { kmin, kmax, census, lemmas } => {
            let mut reports: Vec<Report> = verify::classification_sweep(kmin, kmax)?.into_iter().map(Report::Sweep).collect();
            if census {
                reports.push(Report::Census(verify::small_census(48)?));
            }
            let mut failed = reports.iter().any(|r| !r.anomalies().is_empty());
            if lemmas {
                let checks = verify::lemma_spot_checks(&(kmin..=kmax).collect::<Vec<_>>())?;
                failed |= checks.iter().any(|c| !c.passed);
                reports.push(Report::Lemmas { checks });
            }
            println!("{}", verify::emit_reports(reports));
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Iso { a, b } => {
            let (g, h) = (load(&a)?, load(&b)?);
            if !symmetry::are_isomorphic(&g, &h)? {
                println!("not isomorphic");
                return Ok(ExitCode::from(1));
            }
            println!("isomorphic");
        }
        Command::Quotient { file, order } => {
            let g = load(&file)?;
            let n = g.num_vertices();
            if order == 0 || n % order != 0 {
                return Err(Failure::Usage(format!("order {order} does not divide {n}")));
            }
            let Some(rho) = symmetry::find_k_circulant(&g, n / order)? else {
                eprintln!("no semiregular automorphism of order {order}");
                return Ok(ExitCode::from(1));
            };
            print!("{}", io::write_quotient(&quotient(&g, &rho)?));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("TRICIRC_THREADS").ok().and_then(|t| t.parse().ok()) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
