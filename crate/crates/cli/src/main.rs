use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use whisker_core::decomposability;
use whisker_core::poset::{count_facets_pi, FacetPoset};
use whisker_core::resolution::{self, betti_oracle_bounded, IdealKind, IdealSource, RecursionOptions};
use whisker_core::{properties, Error, FieldSpec, Graph, Kind, PartitionSpec, SimplicialComplex, WhiskeredGraph};

#[derive(Parser, Debug)]
#[command(name = "whisker", version, about = "Whiskered graphs, vertex decomposability and cover-ideal Betti numbers")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Recursive,
    Both,
}

#[derive(clap::Args, Debug, Clone)]
struct Input {
    /// Base graph file (`vertex <v>` / `edge <u> <v>` lines).
    #[arg(long)]
    graph: PathBuf,
    /// Partition file; without one the graph is used as given.
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Construction kind: pi, cc, mc or md.
    #[arg(long, default_value = "cc")]
    kind: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the whiskered graph and print it in the graph file format.
    Build {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify or refute vertex decomposability of an independence complex
    /// or of a complex file.
    CheckVd {
        #[arg(long, required_unless_present = "complex")]
        graph: Option<PathBuf>,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long, default_value = "cc")]
        kind: String,
        /// Complex file (`vertex <v>` / `facet <v> ...` lines).
        #[arg(long, conflicts_with = "graph")]
        complex: Option<PathBuf>,
        /// Exit with status 1 unless the complex is vertex decomposable.
        #[arg(long)]
        expect_vd: bool,
        /// Also search for a shelling order.
        #[arg(long)]
        shelling: bool,
        #[arg(long, default_value_t = decomposability::DEFAULT_SHELLING_BOUND)]
        shelling_bound: usize,
    },
    /// List the facets of the independence complex and count them.
    Facets {
        #[command(flatten)]
        input: Input,
    },
    /// Facet poset of Ind G^pi: interval statistics and the Hasse diagram.
    Poset {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Write the Hasse diagram as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Graded Betti numbers of the cover ideal (or edge ideal).
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Base vertex to split at first (recursive method); defaults to the
        /// first base vertex.
        #[arg(long)]
        vertex: Option<String>,
        /// Coefficient field: F2, F3, ..., or Q.
        #[arg(long, default_value = "F2")]
        field: String,
        /// Show β(S/I) instead of β(I).
        #[arg(long)]
        quotient: bool,
        /// Which ideal of the whiskered graph: cover or edge.
        #[arg(long, default_value = "cover")]
        ideal: String,
        #[arg(long, default_value_t = resolution::DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
        /// Base graphs this small are handed to the oracle by the recursion.
        #[arg(long, default_value_t = 0)]
        cutoff: usize,
    },
    /// Run the seeded random invariant suites.
    Properties {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        count: usize,
    },
    /// Draw the (whiskered) graph as DOT.
    ExportDot {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    Ok(Graph::parse(&read(path)?).with_context(|| format!("in {}", path.display()))?)
}

/// The whiskered graph if a partition is given, else `None`.
fn load_whiskered(graph: &Graph, partition: Option<&Path>, kind: &str) -> anyhow::Result<Option<WhiskeredGraph>> {
    let Some(path) = partition else { return Ok(None) };
    let kind: Kind = kind.parse()?;
    let spec = PartitionSpec::parse(&read(path)?, graph).with_context(|| format!("in {}", path.display()))?;
    Ok(Some(whisker_core::whisker::build_whiskered(graph, &spec, kind)?))
}

fn load_input(input: &Input) -> anyhow::Result<(Graph, Option<WhiskeredGraph>)> {
    let g = load_graph(&input.graph)?;
    let w = load_whiskered(&g, input.partition.as_deref(), &input.kind)?;
    Ok((g, w))
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::ResourceLimit(_)) => 3,
        Some(Error::Rejected(_) | Error::Consistency(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let tsv = cli.format == Format::Tsv;
    match &cli.command {
        Command::Build { input, output } => {
            let (_, w) = load_input(input)?;
            let Some(w) = w else { bail!("build needs --partition") };
            emit(output.as_deref(), &w.graph.to_text())?;
            Ok(0)
        }
        Command::CheckVd { graph, partition, kind, complex, expect_vd, shelling, shelling_bound } => {
            let delta = match (complex, graph) {
                (Some(c), _) => SimplicialComplex::parse(&read(c)?).with_context(|| format!("in {}", c.display()))?,
                (None, Some(gpath)) => {
                    let g = load_graph(gpath)?;
                    let target = match load_whiskered(&g, partition.as_deref(), kind)? {
                        Some(w) => w.graph,
                        None => g,
                    };
                    SimplicialComplex::independence_complex(&target)
                }
                (None, None) => bail!("check-vd needs --graph or --complex"),
            };
            let cert = decomposability::is_vertex_decomposable(&delta)?;
            cert.replay(&delta)?;
            let mut out = String::new();
            if tsv {
                out.push_str(&format!("vertex_decomposable\t{}\n", cert.is_decomposable()));
            }
            out.push_str(&cert.to_trace(&delta));
            let shed = decomposability::shedding_vertices(&delta)?;
            let names: Vec<&str> = shed.iter().map(|&v| delta.vertices()[v].as_str()).collect();
            out.push_str(&format!("shedding vertices: {}\n", names.join(" ")));
            if *shelling {
                match decomposability::is_shellable_bounded(&delta, *shelling_bound)? {
                    Some(order) => {
                        let facets: Vec<String> = order
                            .iter()
                            .map(|&k| format!("{{{}}}", delta.names_of(delta.facet_bits()[k]).join(",")))
                            .collect();
                        out.push_str(&format!("shelling order: {}\n", facets.join(" ")));
                    }
                    None => out.push_str("no shelling order\n"),
                }
            }
            emit(None, &out)?;
            Ok(if *expect_vd && !cert.is_decomposable() { 1 } else { 0 })
        }
        Command::Facets { input } => {
            let (g, w) = load_input(input)?;
            let target = w.as_ref().map_or(&g, |w| &w.graph);
            let facets = target.maximal_independent_sets();
            let mut out = String::new();
            if tsv {
                for f in &facets {
                    out.push_str(&target.names_of(*f).join("\t"));
                    out.push('\n');
                }
            } else {
                out.push_str(&format!("{} facets\n", facets.len()));
                for f in &facets {
                    out.push_str(&format!("{{{}}}\n", target.names_of(*f).join(",")));
                }
                if let Some(w) = w.as_ref().filter(|w| w.kind == Kind::Pi) {
                    let count = count_facets_pi(&g, &w.spec)?;
                    out.push_str(&format!("inclusion-exclusion count: {count}\n"));
                }
            }
            emit(None, &out)?;
            Ok(0)
        }
        Command::Poset { graph, partition, dot } => {
            let g = load_graph(graph)?;
            let w = match load_whiskered(&g, partition.as_deref(), "pi")? {
                Some(w) => w,
                None => whisker_core::whisker::build_whiskered(&g, &PartitionSpec::trivial(&g), Kind::Pi)?,
            };
            let p = FacetPoset::build(&w)?;
            let mut out = String::new();
            if !tsv {
                out.push_str(&format!("{} elements\n", p.len()));
            } else {
                out.push_str("element\trank\tinterval_size\tmaximal_chains\n");
            }
            for top in p.maximal_elements() {
                let s = p.interval_stats(top)?;
                if tsv {
                    out.push_str(&format!("{}\t{}\t{}\t{}\n", p.label(top), s.rank, s.size, s.maximal_chains));
                } else {
                    out.push_str(&format!(
                        "{}: r = {}, |[W,F]| = {}, maximal chains = {}\n",
                        p.label(top),
                        s.rank,
                        s.size,
                        s.maximal_chains
                    ));
                }
            }
            emit(None, &out)?;
            if let Some(path) = dot {
                emit(Some(path), &p.to_dot("facet poset"))?;
            }
            Ok(0)
        }
        Command::Betti { input, method, vertex, field, quotient, ideal, oracle_bound, cutoff } => {
            let field: FieldSpec = field.parse()?;
            let (g, w) = load_input(input)?;
            let target = w.as_ref().map_or(&g, |w| &w.graph);
            let kind: IdealKind = ideal.parse()?;
            let ideal = resolution::ideal_of(IdealSource::Graph(target), kind)?;
            let show = |t: &whisker_core::BettiTable| {
                let t = if *quotient { t.to_quotient() } else { t.clone() };
                if tsv {
                    t.to_tsv()
                } else {
                    t.to_string()
                }
            };
            let recursive = || -> anyhow::Result<whisker_core::BettiTable> {
                let Some(w) = w.as_ref() else { bail!("the recursive method needs --partition") };
                if kind != IdealKind::Cover {
                    bail!("the recursive method computes cover ideals");
                }
                let v = vertex.clone().unwrap_or_else(|| w.base.name(0).to_string());
                let opts = RecursionOptions { cutoff: *cutoff, oracle_bound: *oracle_bound };
                Ok(resolution::betti_recursive_cover_with(w, &v, field, opts)?)
            };
            let mut out = String::new();
            let code = match method {
                Method::Oracle => {
                    out.push_str(&show(&betti_oracle_bounded(&ideal, field, *oracle_bound)?));
                    0
                }
                Method::Recursive => {
                    out.push_str(&show(&recursive()?));
                    0
                }
                Method::Both => {
                    let a = betti_oracle_bounded(&ideal, field, *oracle_bound)?;
                    let b = recursive()?;
                    out.push_str("oracle\n");
                    out.push_str(&show(&a));
                    out.push_str("recursive\n");
                    out.push_str(&show(&b));
                    let diffs = diff(&a, &b);
                    if diffs.is_empty() {
                        out.push_str("diff: none\n");
                        0
                    } else {
                        out.push_str("diff:\n");
                        for d in diffs {
                            out.push_str(&format!("  {d}\n"));
                        }
                        1
                    }
                }
            };
            emit(None, &out)?;
            Ok(code)
        }
        Command::Properties { seed, count } => {
            let results = properties::run_all(*seed, *count);
            let mut out = String::new();
            for r in &results {
                out.push_str(&format!("{r}\n"));
            }
            emit(None, &out)?;
            Ok(if results.iter().all(|r| r.passed()) { 0 } else { 1 })
        }
        Command::ExportDot { input, output } => {
            let (g, w) = load_input(input)?;
            let text = match w {
                Some(w) => w.to_dot("whiskered graph"),
                None => g.to_dot("graph"),
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn diff(a: &whisker_core::BettiTable, b: &whisker_core::BettiTable) -> Vec<String> {
    let keys: std::collections::BTreeSet<_> = a.entries().keys().chain(b.entries().keys()).collect();
    keys.into_iter()
        .filter(|&&(i, j)| a.get(i, j) != b.get(i, j))
        .map(|&(i, j)| format!("b[{i},{j}]: oracle {} recursive {}", a.get(i, j), b.get(i, j)))
        .collect()
}
