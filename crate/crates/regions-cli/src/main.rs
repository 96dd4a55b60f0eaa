//! Command-line front end: loads an arrangement document, runs analyses,
//! and emits JSON, DOT, or text reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regions::complex::BoundedCoverComplex;
use regions::paths::PathSpace;
use regions::poset::RegionPoset;
use regions::report;
use regions::{
    enumerate_chambers, parse_arrangement, Arrangement, ArrangementGraph, ChamberId, Chambers,
    Error, SignVector,
};
use serde_json::json;

const EXIT_IO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INCONSISTENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "regions",
    version,
    about = "Exact chamber, poset, path, and cover-complex analysis of central hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Common {
    /// Input document (JSON: {"dimension", "normals"} or {"elements", "topes"})
    #[arg(long, short = 'i')]
    input: PathBuf,
    /// Base chamber: a tope string, "all", or "first" (canonical order)
    #[arg(long, default_value = "first", allow_hyphen_values = true)]
    base: String,
    /// Maximum positive path length for property-D scans (default: 2n)
    #[arg(long)]
    max_len: Option<usize>,
    /// Depth bound for the cover complex (default: n + 1)
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Project a non-essential arrangement onto the quotient by its
    /// lineality space before analysis
    #[arg(long)]
    essentialize: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List all chambers in canonical order
    Chambers(Common),
    /// The chamber adjacency graph
    Graph(Common),
    /// The poset of regions for the selected base(s)
    Poset(Common),
    /// Lattice diagnostics across all bases
    Lattice(Common),
    /// Per-chamber simpliciality (geometric, essential arrangements)
    Simplicial(Common),
    /// Bounded property-D scan from the selected base(s)
    #[command(name = "property-d")]
    PropertyD(Common),
    /// Non-lattice witness and the constructed violating path
    Witness(Common),
    /// The bounded cover complex with its retraction report
    Complex(Common),
    /// Combined consistency report
    Report(Common),
    /// Raw artifact export
    Export {
        #[command(flatten)]
        common: Common,
        /// What to export
        #[arg(value_enum)]
        artifact: Artifact,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Artifact {
    Chambers,
    Graph,
    Poset,
    Complex,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_)
            | Error::ZeroNormal { .. }
            | Error::DuplicateHyperplane { .. }
            | Error::MalformedRational { .. }
            | Error::EmptyArrangement
            | Error::TooManyHyperplanes { .. }
            | Error::TopeLength { .. }
            | Error::MalformedTope { .. }
            | Error::DuplicateTope { .. }
            | Error::SymmetryViolation { .. }
            | Error::DegenerateTopes { .. } => EXIT_PARSE,
            Error::TopeMode { .. }
            | Error::NotEssential { .. }
            | Error::UnknownChamber { .. }
            | Error::ForeignChamber
            | Error::NotComparable { .. }
            | Error::NoWitness
            | Error::NotAPath { .. } => EXIT_PRECONDITION,
            Error::ClosureCap { .. } | Error::Internal(_) => EXIT_INCONSISTENT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PRECONDITION,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

struct Loaded {
    arrangement: Arrangement,
    chambers: Chambers,
    max_len: usize,
    depth: usize,
    format: Format,
    bases: Vec<ChamberId>,
}

fn load(common: &Common) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(&common.input).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("cannot read {}: {e}", common.input.display()),
    })?;
    let mut arrangement = parse_arrangement(&text)?;
    if common.essentialize {
        arrangement = arrangement.essentialize()?;
    }
    let chambers = enumerate_chambers(&arrangement)?;
    let n = arrangement.n();
    let bases = match common.base.as_str() {
        "first" => vec![0],
        "all" => (0..chambers.len()).collect(),
        tope => {
            let sv = SignVector::parse(tope)?;
            vec![chambers.id_of(&sv).ok_or(Error::UnknownChamber {
                tope: tope.to_string(),
            })?]
        }
    };
    let max_len = match common.max_len {
        None => 2 * n,
        Some(0) => return Err(precondition("--max-len must be at least 1")),
        Some(k) => k,
    };
    Ok(Loaded {
        arrangement,
        chambers,
        max_len,
        depth: common.depth.unwrap_or(n + 1),
        format: common.format,
        bases,
    })
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Chambers(c) => cmd_chambers(&load(&c)?),
        Command::Graph(c) => cmd_graph(&load(&c)?),
        Command::Poset(c) => cmd_poset(&load(&c)?),
        Command::Lattice(c) => cmd_lattice(&load(&c)?),
        Command::Simplicial(c) => cmd_simplicial(&load(&c)?),
        Command::PropertyD(c) => cmd_property_d(&load(&c)?),
        Command::Witness(c) => cmd_witness(&load(&c)?),
        Command::Complex(c) => cmd_complex(&load(&c)?),
        Command::Report(c) => cmd_report(&load(&c)?),
        Command::Export { common, artifact } => cmd_export(&load(&common)?, artifact),
    }
}

fn cmd_chambers(l: &Loaded) -> Result<u8, Failure> {
    let doc = report::chambers_doc(&l.arrangement, &l.chambers);
    match l.format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            println!(
                "mode: {}  elements: {}  chambers: {}",
                doc.mode, doc.elements, doc.count
            );
            for t in &doc.chambers {
                println!("{t}");
            }
        }
        Format::Dot => return Err(precondition("chambers has no DOT form; use `export graph`")),
    }
    Ok(0)
}

fn cmd_graph(l: &Loaded) -> Result<u8, Failure> {
    let g = ArrangementGraph::build(&l.chambers);
    match l.format {
        Format::Dot => print!("{}", regions::dot::graph_dot(&l.chambers, &g)),
        Format::Json => emit_json(&report::graph_doc(&l.chambers, &g)),
        Format::Text => {
            let doc = report::graph_doc(&l.chambers, &g);
            println!(
                "vertices: {}  directed edges: {}",
                doc.vertices.len(),
                doc.directed_edges
            );
            for [a, b] in &doc.edges {
                println!("{a} -- {b}");
            }
        }
    }
    Ok(0)
}

fn cmd_poset(l: &Loaded) -> Result<u8, Failure> {
    match l.format {
        Format::Dot => {
            if l.bases.len() != 1 {
                return Err(precondition("DOT export needs a single base"));
            }
            let p = RegionPoset::build(&l.chambers, l.bases[0])?;
            print!("{}", regions::dot::hasse_dot(&p));
        }
        Format::Json => {
            let mut docs = Vec::new();
            for &b in &l.bases {
                docs.push(report::poset_doc(&RegionPoset::build(&l.chambers, b)?));
            }
            emit_json(&docs);
        }
        Format::Text => {
            for &b in &l.bases {
                let p = RegionPoset::build(&l.chambers, b)?;
                let doc = report::poset_doc(&p);
                println!("base {}: {} elements", doc.base, doc.elements.len());
                for [a, c] in &doc.covers {
                    println!("  {a} < {c}");
                }
            }
        }
    }
    Ok(0)
}

fn cmd_lattice(l: &Loaded) -> Result<u8, Failure> {
    let doc = report::lattice_doc(&l.chambers)?;
    match l.format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            println!("strong: {}  weak: {}", doc.strong, doc.weak);
            for b in &doc.per_base {
                println!("base {}: lattice = {}", b.base, b.is_lattice);
            }
        }
        Format::Dot => return Err(precondition("lattice has no DOT form")),
    }
    Ok(0)
}

fn cmd_simplicial(l: &Loaded) -> Result<u8, Failure> {
    let doc = report::simplicial_doc(&l.arrangement, &l.chambers)?;
    match l.format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            println!("simplicial: {}", doc.simplicial);
            for c in &doc.chambers {
                println!(
                    "{}: walls = {}, simplicial = {}",
                    c.tope, c.walls, c.simplicial
                );
            }
        }
        Format::Dot => return Err(precondition("simplicial has no DOT form")),
    }
    Ok(0)
}

fn cmd_property_d(l: &Loaded) -> Result<u8, Failure> {
    let space = PathSpace::new(&l.chambers);
    let mut docs = Vec::new();
    for &b in &l.bases {
        let scan = regions::verify_property_d_bounded(&space, b, l.max_len)?;
        docs.push(report::property_d_doc(&l.chambers, &scan));
    }
    match l.format {
        Format::Json => emit_json(&docs),
        Format::Text => {
            for d in &docs {
                println!(
                    "base {}: {} (max length {})",
                    d.base, d.verdict, d.max_length
                );
            }
        }
        Format::Dot => return Err(precondition("property-d has no DOT form")),
    }
    Ok(0)
}

fn cmd_witness(l: &Loaded) -> Result<u8, Failure> {
    let space = PathSpace::new(&l.chambers);
    let mut out = Vec::new();
    for &b in &l.bases {
        let p = RegionPoset::build(&l.chambers, b)?;
        match p.find_non_lattice_witness()? {
            None => out.push(json!({
                "base": l.chambers.tope(b).to_string(),
                "is_lattice": true,
                "witness": serde_json::Value::Null,
            })),
            Some(w) => {
                let cex = regions::build_counterexample_path(&space, &w)?;
                out.push(json!({
                    "base": l.chambers.tope(b).to_string(),
                    "is_lattice": false,
                    "witness": report::counterexample_doc(&l.chambers, &w, &cex),
                }));
            }
        }
    }
    match l.format {
        Format::Json => emit_json(&out),
        Format::Text => {
            for v in &out {
                let base = v["base"].as_str().unwrap();
                if v["is_lattice"].as_bool().unwrap() {
                    println!("base {base}: lattice (no witness)");
                } else {
                    let w = &v["witness"];
                    println!(
                        "base {base}: covers {} , {} over {} have no join; violating path: {}",
                        w["witness"]["a"].as_str().unwrap(),
                        w["witness"]["b"].as_str().unwrap(),
                        w["witness"]["c"].as_str().unwrap(),
                        w["path"]
                            .as_array()
                            .unwrap()
                            .iter()
                            .map(|s| s.as_str().unwrap())
                            .collect::<Vec<_>>()
                            .join(" > ")
                    );
                }
            }
        }
        Format::Dot => return Err(precondition("witness has no DOT form")),
    }
    Ok(0)
}

fn cmd_complex(l: &Loaded) -> Result<u8, Failure> {
    let space = PathSpace::new(&l.chambers);
    let mut out = Vec::new();
    for &b in &l.bases {
        let cx = BoundedCoverComplex::build(&space, b, l.depth)?;
        let complex = report::complex_doc(&cx);
        let retraction = regions::contractibility_report(&space, b, l.depth)?;
        out.push(json!({
            "complex": complex,
            "retraction": report::retraction_doc(&l.chambers, &retraction),
        }));
    }
    match l.format {
        Format::Json => emit_json(&out),
        Format::Text => {
            for v in &out {
                let c = &v["complex"];
                println!(
                    "base {} depth {}: {} vertices, {} facets, euler {}; retraction: {}",
                    c["base"].as_str().unwrap(),
                    c["depth"],
                    c["vertices"],
                    c["facet_count"],
                    c["euler"],
                    v["retraction"]["verdict"].as_str().unwrap()
                );
            }
        }
        Format::Dot => return Err(precondition("complex has no DOT form")),
    }
    Ok(0)
}

fn cmd_report(l: &Loaded) -> Result<u8, Failure> {
    let doc =
        report::consistency_report(&l.arrangement, &l.chambers, &l.bases, l.max_len, l.depth)?;
    match l.format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            println!(
                "mode: {}  elements: {}  chambers: {}",
                doc.mode, doc.elements, doc.chamber_count
            );
            println!(
                "simplicial: {}",
                serde_json::to_string(&doc.simplicial).unwrap()
            );
            println!(
                "strong lattice: {}  weak lattice: {}",
                doc.strong_lattice, doc.weak_lattice
            );
            for d in &doc.property_d {
                println!(
                    "property D from {}: {} (max length {})",
                    d.base, d.verdict, d.max_length
                );
            }
            for r in &doc.retraction {
                println!("retraction from {}: {}", r.base, r.verdict);
            }
            println!("consistency: {}", doc.consistency);
        }
        Format::Dot => return Err(precondition("report has no DOT form")),
    }
    if doc.is_consistent() {
        Ok(0)
    } else {
        Ok(EXIT_INCONSISTENT)
    }
}

fn cmd_export(l: &Loaded, artifact: Artifact) -> Result<u8, Failure> {
    match artifact {
        Artifact::Chambers => {
            emit_json(&report::chambers_doc(&l.arrangement, &l.chambers).chambers)
        }
        Artifact::Graph => {
            let g = ArrangementGraph::build(&l.chambers);
            match l.format {
                Format::Dot => print!("{}", regions::dot::graph_dot(&l.chambers, &g)),
                _ => emit_json(&report::graph_doc(&l.chambers, &g)),
            }
        }
        Artifact::Poset => {
            if l.format == Format::Dot {
                if l.bases.len() != 1 {
                    return Err(precondition("DOT export needs a single base"));
                }
                let p = RegionPoset::build(&l.chambers, l.bases[0])?;
                print!("{}", regions::dot::hasse_dot(&p));
            } else {
                let mut docs = Vec::new();
                for &b in &l.bases {
                    docs.push(report::poset_doc(&RegionPoset::build(&l.chambers, b)?));
                }
                emit_json(&docs);
            }
        }
        Artifact::Complex => {
            let space = PathSpace::new(&l.chambers);
            let mut docs = Vec::new();
            for &b in &l.bases {
                let cx = BoundedCoverComplex::build(&space, b, l.depth)?;
                docs.push(report::complex_doc(&cx));
            }
            emit_json(&docs);
        }
    }
    Ok(0)
}
