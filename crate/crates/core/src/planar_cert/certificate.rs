use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{nice_orientation_observed, Case1Search, Step};
use crate::atn::strip_added_edges;
use crate::error::{Error, Result};
use crate::eulerian::{eulerian_counts_with, orientation_from_index, Orientation, MAX_EULER_ARCS};
use crate::graph::{Graph, PlaneGraph};

pub const CERTIFICATE_FORMAT_VERSION: u32 = 1;
pub const DEFAULT_CERT_VERTICES: usize = 12;
pub const DEFAULT_CERT_EDGES: usize = 30;

/// An orientation of a plane graph with every out-degree at most 4 and
/// `|EE| != |OE|`, which shows `AT(G) <= 5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format_version: u32,
    pub graph_name: String,
    /// [`Graph::fingerprint`] of `vertices` and `edges`.
    pub graph_hash: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub boundary_edge: [String; 2],
    /// `[tail, head]` for every edge.
    pub arcs: Vec<[String; 2]>,
    pub out_degree: BTreeMap<String, usize>,
    pub max_out_degree: usize,
    pub even_count: u64,
    pub odd_count: u64,
    pub diff: i64,
    /// Coefficient of `prod x_v^{d+(v)}` in the graph polynomial.
    pub signed_diff: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Step>>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// `d+(v)` in vertex order.
    pub fn out_degrees(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .map(|v| self.out_degree.get(v).copied().unwrap_or(0))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub name: String,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub trace: bool,
    pub search: Case1Search,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            name: "graph".into(),
            max_vertices: DEFAULT_CERT_VERTICES,
            max_edges: DEFAULT_CERT_EDGES,
            trace: false,
            search: Case1Search::default(),
        }
    }
}

pub fn certify_at5(pg: &PlaneGraph) -> Result<Certificate> {
    certify_with(pg, &CertifyOptions::default())
}

/// Triangulates, finds a nice orientation, re-adds `v1 -> v2`, strips the
/// triangulation edges again and checks the result.
pub fn certify_with(pg: &PlaneGraph, opts: &CertifyOptions) -> Result<Certificate> {
    let g = pg.graph();
    if g.vertex_count() > opts.max_vertices {
        return Err(Error::TooLarge(format!(
            "{} vertices exceed the certificate limit of {} (raise it with --max-vertices)",
            g.vertex_count(),
            opts.max_vertices
        )));
    }
    if g.edge_count() > opts.max_edges.min(MAX_EULER_ARCS) {
        return Err(Error::TooManyEdges {
            what: "certificate",
            found: g.edge_count(),
            limit: opts.max_edges.min(MAX_EULER_ARCS),
        });
    }
    let pair = |t: &Graph, (a, b): (usize, usize)| [t.label(a).to_string(), t.label(b).to_string()];

    let mut trace = Vec::new();
    let (tri, added) = pg.triangulate_interior()?;
    if tri.graph().edge_count() > MAX_EULER_ARCS + 1 {
        return Err(Error::TooManyEdges {
            what: "triangulated certificate input",
            found: tri.graph().edge_count(),
            limit: MAX_EULER_ARCS + 1,
        });
    }
    let nice = nice_orientation_observed(&tri, opts.search, &mut |_| {})?;
    trace.extend(nice.trace.iter().cloned());

    let (v1, v2) = tri.boundary_edge();
    let mut arcs = nice.orientation.arcs();
    arcs.push((v1, v2));
    let full = Orientation::from_arcs(tri.graph().clone(), &arcs)
        .map_err(|e| Error::InternalProofViolation(format!("re-adding e: {e}")))?;

    let final_orientation = if added.is_empty() {
        full
    } else {
        trace.push(Step::Triangulate {
            edges: added.iter().map(|&e| pair(tri.graph(), e)).collect(),
        });
        let (eta, _) = strip_added_edges(tri.graph(), &full.index_function(), &added)
            .map_err(|e| Error::InternalProofViolation(format!("stripping triangulation edges: {e}")))?;
        trace.extend(added.iter().map(|&e| Step::Restrict {
            edge: pair(tri.graph(), e),
        }));
        orientation_from_index(g, &eta).ok_or_else(|| {
            Error::InternalProofViolation(format!("index function {eta} is not realizable"))
        })?
    };

    let counts = eulerian_counts_with(&final_orientation, MAX_EULER_ARCS)?;
    if counts.diff() == 0 {
        return Err(Error::InternalProofViolation(
            "final orientation has |EE| = |OE|".into(),
        ));
    }
    let max_out_degree = final_orientation.max_out_degree();
    if max_out_degree > 4 {
        return Err(Error::InternalProofViolation(format!(
            "final orientation has out-degree {max_out_degree}"
        )));
    }
    let sign = if final_orientation.ascending_arcs() % 2 == 0 { 1 } else { -1 };
    Ok(Certificate {
        format_version: CERTIFICATE_FORMAT_VERSION,
        graph_name: opts.name.clone(),
        graph_hash: g.fingerprint(),
        vertices: g.labels().to_vec(),
        edges: g.edges().iter().map(|&e| pair(g, e)).collect(),
        boundary_edge: pair(g, pg.boundary_edge()),
        arcs: final_orientation.arcs().into_iter().map(|a| pair(g, a)).collect(),
        out_degree: (0..g.vertex_count())
            .map(|v| (g.label(v).to_string(), final_orientation.out_degree(v)))
            .collect(),
        max_out_degree,
        even_count: counts.even,
        odd_count: counts.odd,
        diff: counts.diff(),
        signed_diff: sign * counts.diff(),
        trace: opts.trace.then_some(trace),
    })
}

/// One named condition checked by [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn check(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
        passed
    }
}

/// Re-checks a certificate from its own contents using only graph
/// construction and Eulerian counting.
pub fn verify_certificate(cert: &Certificate) -> VerifyReport {
    let mut r = VerifyReport::default();
    r.check(
        "format_version",
        cert.format_version == CERTIFICATE_FORMAT_VERSION,
        format!("found {}", cert.format_version),
    );
    let names: Vec<&str> = cert.vertices.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = cert.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
    let g = match Graph::from_labeled(&names, &edges) {
        Ok(g) => g,
        Err(e) => {
            r.check("graph", false, e.to_string());
            return r;
        }
    };
    let hash = g.fingerprint();
    r.check("graph_hash", hash == cert.graph_hash, format!("recomputed {hash}"));
    let [a, b] = &cert.boundary_edge;
    let on_graph = matches!((g.index_of(a), g.index_of(b)), (Some(x), Some(y)) if g.has_edge(x, y));
    r.check("boundary_edge", on_graph, format!("{a}-{b}"));

    let arcs: Vec<(&str, &str)> = cert.arcs.iter().map(|[t, h]| (t.as_str(), h.as_str())).collect();
    let d = match Orientation::from_labeled_arcs(g.clone(), &arcs) {
        Ok(d) => d,
        Err(e) => {
            r.check("arcs", false, e.to_string());
            return r;
        }
    };
    r.check("arcs", true, format!("{} arcs orient every edge once", d.arc_count()));

    let mismatched: Vec<String> = (0..g.vertex_count())
        .filter(|&v| cert.out_degree.get(g.label(v)) != Some(&d.out_degree(v)))
        .map(|v| format!("{}: stated {:?}, actual {}", g.label(v), cert.out_degree.get(g.label(v)), d.out_degree(v)))
        .collect();
    let extra = cert.out_degree.keys().any(|k| g.index_of(k).is_none());
    r.check(
        "out_degree",
        mismatched.is_empty() && !extra,
        if mismatched.is_empty() { "matches arcs".to_string() } else { mismatched.join("; ") },
    );
    let max = d.max_out_degree();
    r.check(
        "max_out_degree",
        max <= 4 && max == cert.max_out_degree,
        format!("actual {max}, stated {}", cert.max_out_degree),
    );

    let counts = match eulerian_counts_with(&d, MAX_EULER_ARCS) {
        Ok(c) => c,
        Err(e) => {
            r.check("eulerian_counts", false, e.to_string());
            return r;
        }
    };
    r.check(
        "eulerian_counts",
        counts.even == cert.even_count && counts.odd == cert.odd_count,
        format!(
            "recomputed |EE| = {}, |OE| = {}; stated {}, {}",
            counts.even, counts.odd, cert.even_count, cert.odd_count
        ),
    );
    r.check(
        "diff_nonzero",
        counts.diff() != 0 && counts.diff() == cert.diff,
        format!("recomputed {}, stated {}", counts.diff(), cert.diff),
    );
    let sign = if d.ascending_arcs() % 2 == 0 { 1 } else { -1 };
    r.check(
        "signed_diff",
        sign * counts.diff() == cert.signed_diff,
        format!("recomputed {}, stated {}", sign * counts.diff(), cert.signed_diff),
    );
    r
}
