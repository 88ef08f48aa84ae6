//! Subcommands. Each writes its result to `out` or to an `-o` file; the file
//! is written in full to a temporary sibling and renamed into place.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdim_core::embed::{
    embed_apex, embed_chromatic, embed_complete_multipartite, embed_cycle, embed_difference, embed_dps, embed_product,
    embed_simplex, find_dps_point_set,
};
use fdim_core::fdim::{fdim_bracket, fdim_exact_search, is_difference_graph, Effort, SearchOutcome};
use fdim_core::fiber::{check_bipartite_criterion, is_markov_basis, is_minimal, min_markov_basis_size};
use fdim_core::graph::{cartesian_product, color, is_isomorphic};
use fdim_core::{ColoringMode, DpsPointSet, Embedding, FiberGraph, Graph, Limits, LowerCertificate};

use crate::document::{to_canonical, EmbeddingDocument, MovesDocument, PolytopeDocument};
use crate::dot::{fiber_to_dot, graph_to_dot};
use crate::error::{CliError, Result};
use crate::graph_io::{parse_graph, LabeledGraph};

#[derive(Debug, Parser)]
#[command(name = "fdim", version, about = "Fiber graphs of lattice polytopes and graph fiber dimension")]
pub struct Cli {
    #[command(flatten)]
    pub caps: Caps,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Largest number of integer points in a scanned box.
    #[arg(long, global = true)]
    pub max_box: Option<u64>,
    /// Largest dimension in which a box is scanned.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    /// Node budget for the exhaustive searches.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
}

impl Caps {
    pub fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(v) = self.max_box {
            l.max_box_volume = v;
        }
        if let Some(v) = self.max_dim {
            l.max_dim = v;
        }
        if let Some(v) = self.budget {
            l.search_budget = v;
        }
        l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmbedMethod {
    Simplex,
    Chromatic,
    Apex,
    Cycle,
    CompleteMultipartite,
    Difference,
    Dps,
    Search,
    Product,
    /// The upper certificate of `fdim`.
    Best,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Realize a graph as a fiber graph and write the embedding document.
    Embed {
        #[arg(long, value_enum)]
        method: EmbedMethod,
        /// Graph file (`-` for stdin). `product` takes it twice.
        #[arg(long)]
        graph: Vec<PathBuf>,
        /// Cycle length, instead of a graph file.
        #[arg(long)]
        n: Option<usize>,
        /// Part sizes of a complete multipartite graph, instead of a graph file.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Apex node label; by default one of largest degree.
        #[arg(long)]
        apex: Option<String>,
        /// Dimension for `search`.
        #[arg(long)]
        dim: Option<usize>,
        /// Box side for `search` and `dps`.
        #[arg(long = "box")]
        box_side: Option<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an embedding document against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        document: PathBuf,
    },
    /// Bracket the fiber dimension of a graph.
    Fdim {
        #[arg(long)]
        graph: PathBuf,
        /// Skip the apex constructions.
        #[arg(long)]
        no_apex: bool,
        /// Box side for the two-dimensional search.
        #[arg(long = "search-box")]
        search_box: Option<i64>,
        /// Write the upper certificate here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Build F(P, M) and print it as DOT.
    FiberGraph {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        moves: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minimality and Markov-basis checks, and the minimal Markov basis size.
    Markov {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        moves: Option<PathBuf>,
        /// Largest basis size (counting both signs) tried by the search.
        #[arg(long)]
        min_size_cap: Option<usize>,
    },
    /// Search a box for a distinct-pair-sum point set.
    SearchDps {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long = "box")]
        box_side: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let limits = cli.caps.limits();
    match &cli.command {
        Command::Embed { method, graph, n, sizes, apex, dim, box_side, output } => {
            let (g, e) = embed(*method, graph, *n, sizes, apex.as_deref(), *dim, *box_side, &limits)?;
            emit(out, output.as_deref(), &to_canonical(&EmbeddingDocument::new(&e, &g))?)
        }
        Command::Verify { graph, document } => {
            let g = read_graph(graph)?;
            let doc: EmbeddingDocument = serde_json::from_str(&read(document)?)?;
            let e = doc.to_embedding(&g, &limits)?;
            emit(out, None, &format!("ok: {} nodes, dimension {}, method {}\n", g.labels.len(), e.dimension(), e.method))
        }
        Command::Fdim { graph, no_apex, search_box, certificate } => {
            let g = read_graph(graph)?;
            let effort = Effort { apex: !no_apex, search_box: *search_box, ..Effort::with_limits(limits) };
            let b = fdim_bracket(&g.graph, &effort)?;
            let mut text = format!("lower={} upper={} {}\n", b.lower, b.upper, if b.is_exact() { "exact" } else { "open" });
            text += &format!("lower certificate: {}\n", lower_summary(&b.lower_certificate));
            text += &format!(
                "upper certificate: {} embedding in dimension {} with {} moves\n",
                b.upper_certificate.method,
                b.upper,
                b.upper_certificate.moves.positive().len()
            );
            if let Some(c) = &b.difference {
                text += &format!("difference graph: D({}, {:?})\n", c.n, c.dset);
            }
            if let Some(path) = certificate {
                write_atomic(path, &to_canonical(&EmbeddingDocument::new(&b.upper_certificate, &g))?)?;
            }
            emit(out, None, &text)
        }
        Command::FiberGraph { polytope, moves, output } => {
            let p = read_doc::<PolytopeDocument>(polytope)?.to_polytope()?;
            let m = read_doc::<MovesDocument>(moves)?.to_moves()?;
            let fg = FiberGraph::build(&p, &m, &limits)?;
            emit(out, output.as_deref(), &fiber_to_dot(&fg))
        }
        Command::Markov { polytope, moves, min_size_cap } => {
            let p = read_doc::<PolytopeDocument>(polytope)?.to_polytope()?;
            let mut text = format!("lattice points: {}\n", p.lattice_points(&limits)?.len());
            if let Some(path) = moves {
                let m = read_doc::<MovesDocument>(path)?.to_moves()?;
                let min = is_minimal(&p, &m, &limits)?;
                text += &format!("minimal: {}\n", min.minimal);
                for u in &min.unused {
                    text += &format!("unused move: {u}\n");
                }
                text += &format!("markov basis: {}\n", is_markov_basis(&p, &m, &limits)?);
                let bc = check_bipartite_criterion(&p, &m, &limits)?;
                text += &format!("bipartite criterion: applies={} bipartite={}\n", bc.applies, bc.bipartite);
            }
            if let Some(cap) = min_size_cap {
                match min_markov_basis_size(&p, *cap, &limits)? {
                    Some(s) => text += &format!("min markov basis size: {s}\n"),
                    None => text += &format!("min markov basis size: > {cap}\n"),
                }
            }
            emit(out, None, &text)
        }
        Command::SearchDps { n, dim, box_side, output } => match find_dps_point_set(*n, *dim, *box_side, &limits)? {
            Some(s) => {
                let p = fdim_core::LatticePolytope::new(*dim, s.points().to_vec())?;
                emit(out, output.as_deref(), &to_canonical(&PolytopeDocument::new(&p))?)
            }
            None => emit(out, None, &format!("none: no {n}-point set in [0,{box_side}]^{dim}\n")),
        },
    }
}

fn lower_summary(c: &LowerCertificate) -> String {
    match c {
        LowerCertificate::NodeCount { nodes } => format!("node count ({nodes})"),
        LowerCertificate::NotDifferenceGraph => "not a difference graph (complete search)".into(),
        LowerCertificate::CompleteGraphParity { n } => format!("parity classes of K_{n}"),
    }
}

/// Options for the methods that take them.
#[derive(Debug, Clone, Default)]
pub struct EmbedOptions {
    pub apex: Option<String>,
    pub dim: Option<usize>,
    pub box_side: Option<i64>,
}

#[allow(clippy::too_many_arguments)]
fn embed(
    method: EmbedMethod,
    graphs: &[PathBuf],
    n: Option<usize>,
    sizes: &[usize],
    apex: Option<&str>,
    dim: Option<usize>,
    box_side: Option<i64>,
    limits: &Limits,
) -> Result<(LabeledGraph, Embedding)> {
    match (method, graphs) {
        (EmbedMethod::Cycle, []) => {
            let n = n.ok_or_else(|| CliError::Invalid("cycle needs --n or --graph".into()))?;
            Ok((LabeledGraph::numbered(Graph::cycle(n)), embed_cycle(n, limits)?))
        }
        (EmbedMethod::CompleteMultipartite, []) if !sizes.is_empty() => {
            let e = embed_complete_multipartite(sizes, limits)?;
            Ok((LabeledGraph::numbered(Graph::complete_multipartite(sizes)), e))
        }
        (EmbedMethod::Product, [a, b]) => embed_pair(&read_graph(a)?, &read_graph(b)?, limits),
        (EmbedMethod::Product, _) => Err(CliError::Invalid("product takes exactly two --graph files".into())),
        (_, [path]) => {
            if n.is_some() {
                return Err(CliError::Invalid("give only one of --n and --graph".into()));
            }
            let g = read_graph(path)?;
            let opts = EmbedOptions { apex: apex.map(str::to_string), dim, box_side };
            let e = embed_graph(method, &g, &opts, limits)?;
            Ok((g, e))
        }
        (_, []) => Err(CliError::Invalid("--graph is required for this method".into())),
        _ => Err(CliError::Invalid("only `product` takes more than one --graph".into())),
    }
}

/// The product embedding of two graphs, each factor embedded by `best`.
/// Node `(x,y)` is labeled `(x,y)`.
pub fn embed_pair(a: &LabeledGraph, b: &LabeledGraph, limits: &Limits) -> Result<(LabeledGraph, Embedding)> {
    let e = embed_product(&[best(&a.graph, limits)?, best(&b.graph, limits)?], limits)?;
    let labels = a.labels.iter().flat_map(|x| b.labels.iter().map(move |y| format!("({x},{y})"))).collect();
    Ok((LabeledGraph { graph: cartesian_product(&a.graph, &b.graph), labels }, e))
}

/// Embeds one graph by a single-graph method. Methods that do not apply to
/// the graph give an input error.
pub fn embed_graph(method: EmbedMethod, g: &LabeledGraph, opts: &EmbedOptions, limits: &Limits) -> Result<Embedding> {
    let gr = &g.graph;
    let e = match method {
        EmbedMethod::Simplex => embed_simplex(gr, limits)?,
        EmbedMethod::Chromatic => embed_chromatic(gr, &color(gr, ColoringMode::Exact)?, limits)?,
        EmbedMethod::Cycle => {
            if !gr.is_cycle() {
                return Err(CliError::Invalid("the graph is not a cycle".into()));
            }
            transfer(&embed_cycle(gr.node_count(), limits)?, g, "a cycle", limits)?
        }
        EmbedMethod::CompleteMultipartite => {
            let parts = gr
                .complete_multipartite_parts()
                .ok_or_else(|| CliError::Invalid("the graph is not complete multipartite".into()))?;
            let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
            transfer(&embed_complete_multipartite(&sizes, limits)?, g, "complete multipartite", limits)?
        }
        EmbedMethod::Apex => {
            let v = match &opts.apex {
                Some(label) => g.index_of(label).ok_or_else(|| CliError::Invalid(format!("no node {label:?}")))?,
                None => (0..gr.node_count())
                    .max_by_key(|&v| (gr.degree(v), std::cmp::Reverse(v)))
                    .ok_or_else(|| CliError::Invalid("the graph has no nodes".into()))?,
            };
            let sub = gr.remove_node(v);
            let sub = if sub.node_count() == 0 { embed_simplex(&sub, limits)? } else { best(&sub, limits)? };
            embed_apex(gr, v, &sub, limits)?
        }
        EmbedMethod::Difference => {
            let c = is_difference_graph(gr, limits)?
                .ok_or_else(|| CliError::Invalid("the graph is not a difference graph".into()))?;
            embed_difference(gr, &c.position, &c.dset, limits)?
        }
        EmbedMethod::Dps => {
            // Try the smallest possible dimension first, then the simplex.
            let n = gr.node_count();
            let d = n.next_power_of_two().trailing_zeros() as usize;
            let found = match find_dps_point_set(n.max(1), d, opts.box_side.unwrap_or(3), limits) {
                Ok(found) => found,
                Err(e) if e.is_cap_exceeded() => None,
                Err(e) => return Err(e.into()),
            };
            let dps = match found {
                Some(s) => s,
                None => DpsPointSet::simplex(n, limits)?,
            };
            embed_dps(gr, &dps, limits)?
        }
        EmbedMethod::Search => {
            let d = opts.dim.ok_or_else(|| CliError::Invalid("search needs --dim".into()))?;
            let side = opts.box_side.ok_or_else(|| CliError::Invalid("search needs --box".into()))?;
            match fdim_exact_search(gr, d, side, limits) {
                SearchOutcome::Found(e) => e,
                SearchOutcome::NoneInBox { box_side } => {
                    return Err(CliError::Invalid(format!("no realization in [0,{box_side}]^{d}")))
                }
                SearchOutcome::BudgetExceeded => {
                    return Err(fdim_core::Error::CapExceeded {
                        what: "exact search nodes",
                        value: limits.search_budget,
                        cap: limits.search_budget,
                    }
                    .into())
                }
            }
        }
        EmbedMethod::Best => best(gr, limits)?,
        EmbedMethod::Product => return Err(CliError::Invalid("product takes two graphs".into())),
    };
    Ok(e)
}

fn best(g: &Graph, limits: &Limits) -> Result<Embedding> {
    Ok(fdim_bracket(g, &Effort::with_limits(*limits))?.upper_certificate)
}

fn transfer(e: &Embedding, g: &LabeledGraph, what: &str, limits: &Limits) -> Result<Embedding> {
    if is_isomorphic(&g.graph, &e.graph).is_none() {
        return Err(CliError::Invalid(format!("the graph is not {what}")));
    }
    e.transfer_to(&g.graph, limits)?.ok_or_else(|| CliError::Invalid(format!("the graph is not {what}")))
}

fn read(path: &Path) -> Result<String> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(io)
}

fn read_graph(path: &Path) -> Result<LabeledGraph> {
    parse_graph(&read(path)?)
}

fn read_doc<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&read(path)?)?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_atomic(p, text),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    let name = path.file_name().ok_or_else(|| CliError::Invalid(format!("{} is not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.tmp", name.to_string_lossy()));
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

/// DOT for a parsed graph, with its own labels.
pub fn graph_dot(g: &LabeledGraph) -> String {
    graph_to_dot(&g.graph, &g.labels)
}
