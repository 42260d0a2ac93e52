//! The `alon-tarsi` command line. [`run`] is pure apart from file I/O so the
//! binary and the tests share it.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{graph_coefficient_with, graph_polynomial_with, IndexFunction, DEFAULT_COEFFICIENT_EDGES, DEFAULT_EXPAND_EDGES};
use crate::atn::{alon_tarsi_number_with, DEFAULT_AT_EDGES};
use crate::coloring::{choice_number, find_list_coloring, is_proper, random_lists, Color, ListAssignment};
use crate::error::{Error, Result};
use crate::eulerian::{eulerian_counts_with, orientation_from_index, Orientation, DEFAULT_EULER_ARCS};
use crate::graph::generate;
use crate::graph::io::GraphDocument;
use crate::graph::{Graph, PlaneGraph};
use crate::planar_cert::{
    case2_audit, certify_with, chord_product, nice_orientation_observed, verify_certificate, Case1Search,
    Case2Audit, CertifyOptions, Certificate, Step, DEFAULT_CERT_EDGES, DEFAULT_CERT_VERTICES,
};

#[derive(Parser, Debug)]
#[command(name = "alon-tarsi", version, about = "Alon-Tarsi numbers, orientations and certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Raise the edge limit of the chosen computation.
    #[arg(long, global = true)]
    pub max_edges: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficient of one monomial of the graph polynomial.
    Coefficient {
        graph: PathBuf,
        /// Exponents as `v=2,w=1`; omitted vertices get 0.
        #[arg(long, required_unless_present = "polynomial")]
        eta: Option<String>,
        /// Print the whole expansion instead.
        #[arg(long)]
        polynomial: bool,
    },
    /// Even and odd Eulerian sub-digraph counts of an orientation.
    Diff {
        graph: PathBuf,
        /// Arcs as `a->b,b->c`.
        #[arg(long, conflicts_with = "eta")]
        arcs: Option<String>,
        /// Out-degrees as `v=2,w=1`; some orientation realizing them is used.
        #[arg(long)]
        eta: Option<String>,
    },
    /// Alon-Tarsi number by exhaustive search.
    AtNumber {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        /// One plain-text row per graph.
        #[arg(long)]
        table: bool,
    },
    /// Certificate that a plane graph has Alon-Tarsi number at most 5.
    Certify {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Include the recursion trace.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = DEFAULT_CERT_VERTICES)]
        max_vertices: usize,
    },
    /// Re-check a certificate file.
    Verify { certificate: PathBuf },
    /// List coloring from explicit lists or from sampled lists of a certificate.
    Color {
        #[arg(required_unless_present = "from_cert")]
        graph: Option<PathBuf>,
        /// JSON object mapping each vertex to its color list.
        #[arg(long, conflicts_with = "from_cert")]
        lists: Option<PathBuf>,
        /// Sample lists of size d+(v) + 1 for the certificate's orientation.
        #[arg(long)]
        from_cert: Option<PathBuf>,
        #[arg(long, default_value_t = 1, requires = "from_cert")]
        random: usize,
        /// Colors are drawn from 1..=palette (default: largest list size + 1).
        #[arg(long, requires = "from_cert")]
        palette: Option<u32>,
    },
    /// Exhaustive choice number (at most six vertices).
    ChoiceNumber {
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    /// Replay the chord product law and the Case 2 counting argument.
    Audit {
        #[arg(required_unless_present = "all")]
        graph: Option<PathBuf>,
        /// Audit the built-in corpus instead of one file.
        #[arg(long)]
        all: bool,
    },
}

/// Exit status plus captured output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        Outcome { code: 2, stdout, stderr }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = match cli.global.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Parse(format!("--jobs: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(outcome) => outcome,
        Err(e) => {
            let code = match e {
                Error::AuditFailure { .. } | Error::InternalProofViolation(_) | Error::NoColoring => 2,
                _ => 1,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn load(path: &Path) -> Result<(String, GraphDocument)> {
    let doc = GraphDocument::read(path)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
    Ok((doc.name_or(stem), doc))
}

fn parse_arcs(g: &Graph, text: &str) -> Result<Orientation> {
    let mut arcs = Vec::new();
    for part in text.split([',', ' ', '\n']).map(str::trim).filter(|p| !p.is_empty()) {
        let (t, h) = part
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("arc `{part}` is not of the form tail->head")))?;
        arcs.push((g.require(t.trim())?, g.require(h.trim())?));
    }
    Orientation::from_arcs(g.clone(), &arcs)
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let max_edges = cli.global.max_edges;
    match &cli.command {
        Command::Coefficient { graph, eta, polynomial } => {
            let (name, doc) = load(graph)?;
            let g = doc.to_graph()?;
            if *polynomial {
                let p = graph_polynomial_with(&g, max_edges.unwrap_or(DEFAULT_EXPAND_EDGES))?;
                let terms: Vec<Value> = p
                    .to_records(&g)
                    .into_iter()
                    .map(|t| json!({"exponents": t.exponents, "coefficient": t.coefficient}))
                    .collect();
                return Ok(Outcome::ok(pretty(&json!({
                    "format_version": 1,
                    "graph": name,
                    "terms": terms,
                }))));
            }
            let eta = IndexFunction::parse_labeled(&g, eta.as_deref().unwrap_or(""))?;
            let c = graph_coefficient_with(&g, &eta, max_edges.unwrap_or(DEFAULT_COEFFICIENT_EDGES))?;
            Ok(Outcome::ok(pretty(&json!({
                "format_version": 1,
                "graph": name,
                "eta": eta.labeled(&g),
                "coefficient": c.to_string(),
            }))))
        }
        Command::Diff { graph, arcs, eta } => {
            let (name, doc) = load(graph)?;
            let g = doc.to_graph()?;
            let d = match (arcs, eta) {
                (Some(a), _) => parse_arcs(&g, a)?,
                (None, Some(e)) => {
                    let eta = IndexFunction::parse_labeled(&g, e)?;
                    orientation_from_index(&g, &eta).ok_or_else(|| {
                        Error::PreconditionViolated(format!("no orientation has out-degrees {eta}"))
                    })?
                }
                (None, None) => return Err(Error::Parse("give --arcs or --eta".into())),
            };
            let counts = eulerian_counts_with(&d, max_edges.unwrap_or(DEFAULT_EULER_ARCS))?;
            let sign = if d.ascending_arcs() % 2 == 0 { 1 } else { -1 };
            let arcs: Vec<[String; 2]> = d.labeled_arcs().into_iter().map(|(t, h)| [t, h]).collect();
            Ok(Outcome::ok(pretty(&json!({
                "format_version": 1,
                "graph": name,
                "arcs": arcs,
                "out_degree": d.index_function().labeled(&g),
                "even_count": counts.even,
                "odd_count": counts.odd,
                "diff": counts.diff(),
                "signed_diff": sign * counts.diff(),
            }))))
        }
        Command::AtNumber { graphs, kmax, table } => {
            let mut rows = Vec::new();
            let mut text = String::new();
            for path in graphs {
                let (name, doc) = load(path)?;
                let g = doc.to_graph()?;
                let r = alon_tarsi_number_with(&g, *kmax, max_edges.unwrap_or(DEFAULT_AT_EDGES))?;
                let witness = r.witness.labeled(&g);
                if *table {
                    let w: Vec<String> = g.labels().iter().map(|l| format!("{l}={}", witness.get(l).copied().unwrap_or(0))).collect();
                    text.push_str(&format!(
                        "{name}\t{}\t{}\t{}\t{}\n",
                        g.vertex_count(),
                        g.edge_count(),
                        r.at_number,
                        w.join(",")
                    ));
                }
                rows.push(json!({
                    "format_version": 1,
                    "graph": name,
                    "n": g.vertex_count(),
                    "m": g.edge_count(),
                    "at_number": r.at_number,
                    "witness_index": witness,
                    "witness_coefficient": r.coefficient.to_string(),
                }));
            }
            if *table {
                return Ok(Outcome::ok(format!("graph\tn\tm\tAT\twitness\n{text}")));
            }
            let out = if rows.len() == 1 { rows.pop().unwrap() } else { Value::Array(rows) };
            Ok(Outcome::ok(pretty(&out)))
        }
        Command::Certify {
            graph,
            output,
            trace,
            max_vertices,
        } => {
            let (name, doc) = load(graph)?;
            let pg = doc.to_plane_graph()?;
            let opts = CertifyOptions {
                name,
                max_vertices: *max_vertices,
                max_edges: max_edges.unwrap_or(DEFAULT_CERT_EDGES),
                trace: *trace,
                search: Case1Search::default(),
            };
            let cert = certify_with(&pg, &opts)?;
            let mut text = cert.to_json();
            text.push('\n');
            match output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    Ok(Outcome::ok(format!(
                        "certificate for {} written to {} (max out-degree {}, diff {})\n",
                        cert.graph_name,
                        path.display(),
                        cert.max_out_degree,
                        cert.diff
                    )))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Verify { certificate } => {
            let cert = read_certificate(certificate)?;
            let report = verify_certificate(&cert);
            let out = pretty(&json!({
                "format_version": 1,
                "graph": cert.graph_name,
                "valid": report.passed(),
                "checks": report.checks,
            }));
            if report.passed() {
                Ok(Outcome::ok(out))
            } else {
                let why: Vec<String> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
                Ok(Outcome::failed(out, format!("verification failed: {}\n", why.join("; "))))
            }
        }
        Command::Color {
            graph,
            lists,
            from_cert,
            random,
            palette,
        } => match from_cert {
            Some(path) => color_from_certificate(path, *random, *palette, cli.global.seed),
            None => {
                let (name, doc) = load(graph.as_ref().expect("clap requires a graph"))?;
                let g = doc.to_graph()?;
                let lists_path = lists
                    .as_ref()
                    .ok_or_else(|| Error::Parse("give --lists or --from-cert".into()))?;
                let text = std::fs::read_to_string(lists_path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", lists_path.display())))?;
                let map: BTreeMap<String, Vec<Color>> =
                    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                let lists = ListAssignment::from_labeled(&g, &map)?;
                match find_list_coloring(&g, &lists) {
                    Ok(c) => Ok(Outcome::ok(pretty(&json!({
                        "format_version": 1,
                        "graph": name,
                        "colorable": true,
                        "coloring": c.to_labeled(&g),
                    })))),
                    Err(Error::NoColoring) => Ok(Outcome::failed(
                        pretty(&json!({
                            "format_version": 1,
                            "graph": name,
                            "colorable": false,
                            "lists": lists.to_labeled(&g),
                        })),
                        "no proper coloring from these lists\n".into(),
                    )),
                    Err(e) => Err(e),
                }
            }
        },
        Command::ChoiceNumber { graph, kmax } => {
            let (name, doc) = load(graph)?;
            let g = doc.to_graph()?;
            let r = choice_number(&g, *kmax)?;
            Ok(Outcome::ok(pretty(&json!({
                "format_version": 1,
                "graph": name,
                "choice_number": r.choice_number,
                "counterexample": r.counterexample.map(|l| l.to_labeled(&g)),
            }))))
        }
        Command::Audit { graph, all } => {
            let instances: Vec<(String, PlaneGraph)> = if *all {
                generate::corpus()
            } else {
                let (name, doc) = load(graph.as_ref().expect("clap requires a graph"))?;
                vec![(name, doc.to_plane_graph()?)]
            };
            audit(&instances)
        }
    }
}

fn read_certificate(path: &Path) -> Result<Certificate> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Certificate::parse(&text)
}

fn color_from_certificate(path: &Path, samples: usize, palette: Option<u32>, seed: u64) -> Result<Outcome> {
    let cert = read_certificate(path)?;
    let report = verify_certificate(&cert);
    if !report.passed() {
        let why: Vec<String> = report.failures().map(|c| c.name.to_string()).collect();
        return Ok(Outcome::failed(String::new(), format!("certificate invalid: {}\n", why.join(", "))));
    }
    let names: Vec<&str> = cert.vertices.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = cert.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
    let g = Graph::from_labeled(&names, &edges)?;
    let sizes: Vec<usize> = cert.out_degrees().iter().map(|d| d + 1).collect();
    let palette = palette.unwrap_or(*sizes.iter().max().unwrap_or(&1) as u32 + 1);
    if (palette as usize) < *sizes.iter().max().unwrap_or(&1) {
        return Err(Error::Parse(format!("--palette {palette} is smaller than the largest list")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colorings = Vec::new();
    for i in 0..samples {
        let lists = random_lists(&sizes, palette, &mut rng);
        match find_list_coloring(&g, &lists) {
            Ok(c) if is_proper(&g, &lists, &c) => {
                colorings.push(json!({"lists": lists.to_labeled(&g), "coloring": c.to_labeled(&g)}))
            }
            _ => {
                return Ok(Outcome::failed(
                    pretty(&json!({"sample": i, "lists": lists.to_labeled(&g)})),
                    format!("sample {i}: lists of size d+(v)+1 admit no coloring\n"),
                ))
            }
        }
    }
    Ok(Outcome::ok(pretty(&json!({
        "format_version": 1,
        "graph": cert.graph_name,
        "seed": seed,
        "palette": palette,
        "samples": colorings,
    }))))
}

fn audit(instances: &[(String, PlaneGraph)]) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (name, pg) in instances {
        let (tri, _) = pg.triangulate_interior()?;
        let mut case2 = Vec::new();
        let mut chords = Vec::new();
        nice_orientation_observed(&tri, Case1Search::default(), &mut |ev| {
            if let Some(Step::Case2 { .. }) = ev.step {
                case2.push(ev.graph.clone());
            }
            if let Some((d1, d2)) = ev.parts {
                chords.push(chord_product(ev.orientation, d1, d2));
            }
        })?;
        let mut chord_ok = 0;
        for c in chords {
            match c {
                Ok(p) if p.holds() => chord_ok += 1,
                Ok(p) => failures.push(format!(
                    "{name}: chord product {} != {} * {}",
                    p.whole, p.first, p.second
                )),
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
        let mut case2_ok = 0;
        for sub in &case2 {
            match case2_audit(sub) {
                Ok(Case2Audit::Passed(_)) => case2_ok += 1,
                Ok(Case2Audit::NotApplicable { reason }) => failures.push(format!("{name}: Case 2 node not auditable: {reason}")),
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
        rows.push(json!({
            "graph": name,
            "chord_splits": chord_ok,
            "case2_instances": case2.len(),
            "case2_passed": case2_ok,
        }));
    }
    let out = pretty(&json!({
        "format_version": 1,
        "instances": rows,
        "failures": failures,
    }));
    if failures.is_empty() {
        Ok(Outcome::ok(out))
    } else {
        Ok(Outcome::failed(out, format!("{} audit failures\n", failures.len())))
    }
}
