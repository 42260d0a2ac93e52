//! Nice orientations of near-triangulations and certificates that plane
//! graphs have Alon–Tarsi number at most 5.
//!
//! A nice orientation of `(G, e)`, `e = v1 v2` on the boundary, orients
//! `G - e` so that `v1` and `v2` are sinks, every other boundary vertex has
//! out-degree at most 2, every interior vertex at most 4, and the even and odd
//! Eulerian sub-digraph counts differ.

mod audit;
mod certificate;

use serde::{Deserialize, Serialize};

use crate::algebra::IndexFunction;
use crate::atn::{first_in_order, nonzero_coefficient, BoundedCompositions};
use crate::error::{Error, Result};
use crate::eulerian::{eulerian_counts_with, orientation_from_index, EulerCounts, Orientation, MAX_EULER_ARCS};
use crate::graph::{Graph, NeighborFan, PlaneGraph};

pub use audit::{
    audit_case2_extension, case2_audit, chord_product, directed_cycles_through, Case2Audit, Case2Report,
    ChordProduct, CycleAudit,
};
pub use certificate::{
    certify_at5, certify_with, verify_certificate, CertifyOptions, Certificate, Check, VerifyReport,
    CERTIFICATE_FORMAT_VERSION, DEFAULT_CERT_EDGES, DEFAULT_CERT_VERTICES,
};

/// One recorded decision of the prover or of the certificate pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    ChordSplit { chord: [String; 2] },
    Base3 { vertex: String },
    /// `via` names the `u_i` whose cycle reversal produced the special
    /// orientation; absent when it came from [`special_search`].
    Case1 {
        vertex: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        via: Option<String>,
    },
    Case2 { vertex: String },
    Triangulate { edges: Vec<[String; 2]> },
    Restrict { edge: [String; 2] },
}

/// How the prover looks for a special orientation of `(G', e)` when the
/// boundary has at least four vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Case1Search {
    /// Reverse a shortest directed path `v_{n-1} -> u_i` in the recursive
    /// orientation of `G'` and keep the first result with nonzero difference;
    /// fall back to Case 2, then to [`special_search`].
    #[default]
    PathReversal,
    /// Try Case 2 first and run [`special_search`] only when its difference
    /// vanishes.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceOrientation {
    /// Orientation of `G - e`.
    pub orientation: Orientation,
    pub counts: EulerCounts,
    /// Steps in completion order (children before parents).
    pub trace: Vec<Step>,
}

impl NiceOrientation {
    pub fn diff(&self) -> i64 {
        self.counts.diff()
    }
}

/// Reported once per recursive call, after that call has finished.
pub struct ProofEvent<'a> {
    pub graph: &'a PlaneGraph,
    /// `None` for the single-edge base.
    pub step: Option<&'a Step>,
    pub orientation: &'a Orientation,
    pub counts: EulerCounts,
    /// Orientations of the two sides of a chord split.
    pub parts: Option<(&'a Orientation, &'a Orientation)>,
}

pub fn nice_orientation(pg: &PlaneGraph) -> Result<NiceOrientation> {
    nice_orientation_observed(pg, Case1Search::default(), &mut |_| {})
}

pub fn nice_orientation_observed(
    pg: &PlaneGraph,
    search: Case1Search,
    observer: &mut dyn FnMut(&ProofEvent),
) -> Result<NiceOrientation> {
    let m = pg.graph().edge_count();
    if m > MAX_EULER_ARCS + 1 {
        return Err(Error::TooManyEdges {
            what: "nice orientation",
            found: m,
            limit: MAX_EULER_ARCS + 1,
        });
    }
    let mut trace = Vec::new();
    let (orientation, counts) = Prover {
        search,
        observer,
        trace: &mut trace,
    }
    .prove(pg)?;
    Ok(NiceOrientation {
        orientation,
        counts,
        trace,
    })
}

struct Prover<'a> {
    search: Case1Search,
    observer: &'a mut dyn FnMut(&ProofEvent<'_>),
    trace: &'a mut Vec<Step>,
}

fn counts_of(d: &Orientation) -> Result<EulerCounts> {
    eulerian_counts_with(d, MAX_EULER_ARCS)
}

/// Arcs of `d` expressed in the vertex indices of `target` (matched by label).
fn lift(d: &Orientation, target: &Graph) -> Vec<(usize, usize)> {
    let g = d.graph();
    d.arcs()
        .into_iter()
        .map(|(t, h)| {
            (
                target.index_of(g.label(t)).expect("shared label"),
                target.index_of(g.label(h)).expect("shared label"),
            )
        })
        .collect()
}

fn violation(context: &str, err: Error) -> Error {
    Error::InternalProofViolation(format!("{context}: {err}"))
}

/// The two candidate extensions of a recursive orientation `D''` of `G' - e`
/// back to `G - e` after deleting `v_n`.
pub(crate) struct Extension<'p> {
    pub pg: &'p PlaneGraph,
    pub fan: &'p NeighborFan,
    /// `v1`, `v_{n-1}`, `v_n` and the `u_i` in `pg` indices.
    pub v1: usize,
    pub v_prev: usize,
    pub vn: usize,
    pub interior: Vec<usize>,
    pub target: Graph,
}

impl<'p> Extension<'p> {
    pub fn new(pg: &'p PlaneGraph, sub: &'p PlaneGraph, fan: &'p NeighborFan) -> Self {
        let g = pg.graph();
        let nb = pg.boundary().len();
        let to_pg = |w: usize| g.index_of(sub.label(w)).expect("shared label");
        Extension {
            pg,
            fan,
            v1: pg.boundary()[0],
            v_prev: pg.boundary()[nb - 2],
            vn: pg.boundary()[nb - 1],
            interior: fan.interior.iter().map(|&u| to_pg(u)).collect(),
            target: pg.graph_minus_boundary_edge(),
        }
    }

    fn extend(&self, d_sub: &Orientation, extra: &[(usize, usize)]) -> Result<Orientation> {
        let mut arcs = lift(d_sub, &self.target);
        arcs.extend_from_slice(extra);
        Orientation::from_arcs(self.target.clone(), &arcs).map_err(|e| violation("extension", e))
    }

    /// `v3 -> v1`, `v3 -> v2`, `u_i -> v3`.
    pub fn base3(&self, d_sub: &Orientation) -> Result<Orientation> {
        let v2 = self.pg.boundary()[1];
        let mut extra = vec![(self.vn, self.v1), (self.vn, v2)];
        extra.extend(self.interior.iter().map(|&u| (u, self.vn)));
        self.extend(d_sub, &extra)
    }

    /// `v_n -> v1`, `v_n -> v_{n-1}`, `u_i -> v_n`.
    pub fn case2(&self, d_sub: &Orientation) -> Result<Orientation> {
        let mut extra = vec![(self.vn, self.v1), (self.vn, self.v_prev)];
        extra.extend(self.interior.iter().map(|&u| (u, self.vn)));
        self.extend(d_sub, &extra)
    }

    /// `v_n -> v1`, `v_{n-1} -> v_n`, `u_i -> v_n` on top of a special
    /// orientation of `G' - e`.
    pub fn case1(&self, special: &Orientation) -> Result<Orientation> {
        let mut extra = vec![(self.vn, self.v1), (self.v_prev, self.vn)];
        extra.extend(self.interior.iter().map(|&u| (u, self.vn)));
        self.extend(special, &extra)
    }

    /// `D''` with a shortest directed path `v_{n-1} -> u` reversed, if one
    /// exists (`u` in `G'` indices).
    pub fn reversal(&self, d_sub: &Orientation, u: usize) -> Option<(Vec<usize>, Orientation)> {
        let path = d_sub.directed_path(self.fan.v_prev, u)?;
        let reversed = d_sub.reverse_arcs(d_sub.path_arcs(&path));
        Some((path, reversed))
    }
}

impl Prover<'_> {
    fn emit(&mut self, pg: &PlaneGraph, step: Option<Step>, d: &Orientation, counts: EulerCounts) {
        self.emit_parts(pg, step, d, counts, None)
    }

    fn emit_parts(
        &mut self,
        pg: &PlaneGraph,
        step: Option<Step>,
        d: &Orientation,
        counts: EulerCounts,
        parts: Option<(&Orientation, &Orientation)>,
    ) {
        let event = ProofEvent {
            graph: pg,
            step: step.as_ref(),
            orientation: d,
            counts,
            parts,
        };
        (self.observer)(&event);
        if let Some(s) = step {
            self.trace.push(s);
        }
    }

    fn prove(&mut self, pg: &PlaneGraph) -> Result<(Orientation, EulerCounts)> {
        let nb = pg.boundary().len();
        if nb == 2 {
            if pg.graph().edge_count() != 1 {
                return Err(Error::PreconditionViolated(
                    "a two-vertex boundary must be the single edge e".into(),
                ));
            }
            let d = Orientation::new(pg.graph_minus_boundary_edge(), Vec::new());
            let counts = EulerCounts { even: 1, odd: 0 };
            self.emit(pg, None, &d, counts);
            return Ok((d, counts));
        }
        if !pg.is_near_triangulation() {
            return Err(Error::NotNearTriangulation(format!(
                "an interior face of `{}` is not a triangle",
                pg.graph().labels().join(",")
            )));
        }
        if let Some(chord) = pg.find_chord() {
            let (g1, g2) = pg.split_on_chord(chord)?;
            let (d1, c1) = self.prove(&g1)?;
            let (d2, c2) = self.prove(&g2)?;
            let target = pg.graph_minus_boundary_edge();
            let mut arcs = lift(&d1, &target);
            arcs.extend(lift(&d2, &target));
            let d = Orientation::from_arcs(target, &arcs).map_err(|e| violation("chord union", e))?;
            let counts = counts_of(&d)?;
            if counts.diff() != c1.diff() * c2.diff() {
                return Err(Error::InternalProofViolation(format!(
                    "chord {}-{}: difference {} is not {} * {}",
                    pg.label(chord.0),
                    pg.label(chord.1),
                    counts.diff(),
                    c1.diff(),
                    c2.diff()
                )));
            }
            let step = Step::ChordSplit {
                chord: [pg.label(chord.0).to_string(), pg.label(chord.1).to_string()],
            };
            self.emit_parts(pg, Some(step), &d, counts, Some((&d1, &d2)));
            return Ok((d, counts));
        }

        let (sub, fan) = pg.delete_boundary_vertex()?;
        let (d_sub, c_sub) = self.prove(&sub)?;
        let ext = Extension::new(pg, &sub, &fan);
        let vn_label = pg.label(ext.vn).to_string();

        if nb == 3 {
            let d = ext.base3(&d_sub)?;
            let counts = counts_of(&d)?;
            if counts != c_sub {
                return Err(Error::InternalProofViolation(format!(
                    "base case at {vn_label}: counts changed by sink arcs"
                )));
            }
            self.emit(pg, Some(Step::Base3 { vertex: vn_label }), &d, counts);
            return Ok((d, counts));
        }

        if self.search == Case1Search::PathReversal {
            for &u in &fan.interior {
                let Some((_, special)) = ext.reversal(&d_sub, u) else {
                    continue;
                };
                let c = counts_of(&special)?;
                if c.diff() != 0 {
                    let d = ext.case1(&special)?;
                    let counts = counts_of(&d)?;
                    let step = Step::Case1 {
                        vertex: vn_label,
                        via: Some(sub.label(u).to_string()),
                    };
                    return self.finish(pg, step, d, counts);
                }
            }
        }
        let d = ext.case2(&d_sub)?;
        let counts = counts_of(&d)?;
        if counts.diff() != 0 {
            return self.finish(pg, Step::Case2 { vertex: vn_label }, d, counts);
        }
        if let Some(special) = special_search(&sub, &fan)? {
            let d = ext.case1(&special)?;
            let counts = counts_of(&d)?;
            return self.finish(pg, Step::Case1 { vertex: vn_label, via: None }, d, counts);
        }
        Err(Error::InternalProofViolation(format!(
            "vertex {vn_label}: Case 2 difference vanishes and no special orientation exists \
             (recursive difference {})",
            c_sub.diff()
        )))
    }

    fn finish(
        &mut self,
        pg: &PlaneGraph,
        step: Step,
        d: Orientation,
        counts: EulerCounts,
    ) -> Result<(Orientation, EulerCounts)> {
        if counts.diff() == 0 {
            return Err(Error::InternalProofViolation(format!("{step:?} produced difference 0")));
        }
        self.emit(pg, Some(step), &d, counts);
        Ok((d, counts))
    }
}

/// Out-degree caps of a special orientation of `G' - e`.
pub fn special_caps(sub: &PlaneGraph, fan: &NeighborFan) -> Vec<u32> {
    let g = sub.graph();
    let (v1, v2) = sub.boundary_edge();
    (0..g.vertex_count())
        .map(|v| {
            if v == v1 || v == v2 {
                0
            } else if v == fan.v_prev {
                1
            } else if fan.interior.contains(&v) {
                3
            } else if sub.is_boundary(v) {
                2
            } else {
                4
            }
        })
        .collect()
}

/// True iff `d` (an orientation of `G' - e`) respects [`special_caps`].
pub fn is_special(sub: &PlaneGraph, fan: &NeighborFan, d: &Orientation) -> bool {
    let caps = special_caps(sub, fan);
    d.out_degrees().iter().zip(&caps).all(|(&o, &c)| o as u32 <= c)
}

/// First special orientation of `(G', e)` with nonzero difference, found by
/// enumerating capped index functions of `G' - e` in lexicographic order and
/// evaluating their coefficients.
pub fn special_search(sub: &PlaneGraph, fan: &NeighborFan) -> Result<Option<Orientation>> {
    let h = sub.graph_minus_boundary_edge();
    let caps: Vec<u32> = special_caps(sub, fan)
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.min(h.degree(v) as u32))
        .collect();
    let limit = h.edge_count();
    let found = first_in_order(BoundedCompositions::new(caps, limit as u64), |x| {
        let eta = IndexFunction::new(x.to_vec());
        Ok(nonzero_coefficient(&h, &eta, limit)?.map(|_| eta))
    })?;
    Ok(found.map(|eta| orientation_from_index(&h, &eta).expect("realizability checked")))
}

/// Outcome of [`verify_nice`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceReport {
    pub v1_out: usize,
    pub v2_out: usize,
    /// Boundary vertices other than `v1, v2` with out-degree above 2.
    pub boundary_violations: Vec<(String, usize)>,
    /// Interior vertices with out-degree above 4.
    pub interior_violations: Vec<(String, usize)>,
    pub counts: EulerCounts,
}

impl NiceReport {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.v1_out != 0 {
            out.push(format!("d+(v1) = {} (must be 0)", self.v1_out));
        }
        if self.v2_out != 0 {
            out.push(format!("d+(v2) = {} (must be 0)", self.v2_out));
        }
        for (v, d) in &self.boundary_violations {
            out.push(format!("boundary vertex {v} has out-degree {d} > 2"));
        }
        for (v, d) in &self.interior_violations {
            out.push(format!("interior vertex {v} has out-degree {d} > 4"));
        }
        if self.counts.diff() == 0 {
            out.push(format!(
                "|EE| = |OE| = {} (difference must be nonzero)",
                self.counts.even
            ));
        }
        out
    }
}

/// Checks the nice-orientation conditions for `d`, which must orient exactly
/// `G - e`. Counts are recomputed from scratch.
pub fn verify_nice(pg: &PlaneGraph, d: &Orientation) -> Result<NiceReport> {
    let expected = pg.graph_minus_boundary_edge();
    let g = d.graph();
    if g.labels() != expected.labels() || g.edges() != expected.edges() {
        return Err(Error::EdgeSetMismatch(
            "orientation does not cover exactly G - e".into(),
        ));
    }
    let (v1, v2) = pg.boundary_edge();
    let mut boundary_violations = Vec::new();
    let mut interior_violations = Vec::new();
    for v in 0..g.vertex_count() {
        if v == v1 || v == v2 {
            continue;
        }
        let out = d.out_degree(v);
        if pg.is_boundary(v) && out > 2 {
            boundary_violations.push((pg.label(v).to_string(), out));
        } else if !pg.is_boundary(v) && out > 4 {
            interior_violations.push((pg.label(v).to_string(), out));
        }
    }
    Ok(NiceReport {
        v1_out: d.out_degree(v1),
        v2_out: d.out_degree(v2),
        boundary_violations,
        interior_violations,
        counts: counts_of(d)?,
    })
}
