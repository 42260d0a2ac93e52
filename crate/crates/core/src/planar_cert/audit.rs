//! Replays of the two counting arguments behind the prover: the product law
//! at chord splits and the cycle-reversal bijection behind Case 2.

use serde::Serialize;

use super::{counts_of, is_special, nice_orientation, Extension};
use crate::error::{Error, Result};
use crate::eulerian::{eulerian_subgraphs, is_balanced, ArcSet, EulerCounts, Orientation, MAX_EULER_ARCS};
use crate::graph::PlaneGraph;

fn fail(step: &str, detail: impl Into<String>) -> Error {
    Error::AuditFailure {
        step: step.to_string(),
        detail: detail.into(),
    }
}

/// Every simple directed cycle of `d` that uses the arc `tail -> head`, as
/// vertex sequences starting `tail, head, ...`.
pub fn directed_cycles_through(d: &Orientation, tail: usize, head: usize) -> Vec<Vec<usize>> {
    let g = d.graph();
    let mut out = Vec::new();
    match g.edge_index(tail, head) {
        Some(i) if d.arc(i) == (tail, head) => {}
        _ => return out,
    }
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = vec![tail, head];
    on_path[tail] = true;
    on_path[head] = true;
    fn dfs(d: &Orientation, tail: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        for &y in d.graph().neighbors(x) {
            let i = d.graph().edge_index(x, y).unwrap();
            if d.arc(i).0 != x {
                continue;
            }
            if y == tail && path.len() > 2 {
                out.push(path.clone());
            } else if !on_path[y] {
                on_path[y] = true;
                path.push(y);
                dfs(d, tail, path, on_path, out);
                path.pop();
                on_path[y] = false;
            }
        }
    }
    dfs(d, tail, &mut path, &mut on_path, &mut out);
    out
}

fn parity_counts(sets: &[ArcSet]) -> EulerCounts {
    let odd = sets.iter().filter(|s| s.count_ones() % 2 == 1).count() as u64;
    EulerCounts {
        even: sets.len() as u64 - odd,
        odd,
    }
}

/// Differences of a chord-split union and its two parts, each obtained by
/// listing Eulerian sub-digraphs explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChordProduct {
    pub whole: i64,
    pub first: i64,
    pub second: i64,
}

impl ChordProduct {
    pub fn holds(&self) -> bool {
        self.whole == self.first * self.second
    }
}

pub fn chord_product(whole: &Orientation, first: &Orientation, second: &Orientation) -> Result<ChordProduct> {
    let diff = |d: &Orientation| -> Result<i64> { Ok(parity_counts(&eulerian_subgraphs(d, MAX_EULER_ARCS)?).diff()) };
    Ok(ChordProduct {
        whole: diff(whole)?,
        first: diff(first)?,
        second: diff(second)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Case2Audit {
    NotApplicable { reason: String },
    Passed(Case2Report),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case2Report {
    pub vertex: String,
    pub v_prev: String,
    pub interior: Vec<String>,
    /// Counts of the Case 2 orientation `D` and of the recursive `D''`.
    pub counts: EulerCounts,
    pub recursive_counts: EulerCounts,
    pub cycles: Vec<CycleAudit>,
}

/// The part of the audit attached to one interior neighbor `u_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleAudit {
    pub u: String,
    /// Number of directed cycles of `D` through `u_i -> v_n`; all of them were
    /// checked to continue along `v_n -> v_{n-1}`.
    pub cycles_through_arc: usize,
    /// The cycle `C_i` used for the bijection.
    pub cycle: Option<Vec<String>>,
    /// Counts of `D'_i`.
    pub reversed_counts: Option<EulerCounts>,
    /// `|EE_i(D)|`, `|OE_i(D)|` by listing.
    pub direct: EulerCounts,
    /// Parity classes of the images `H xor C_i` in `D'_i`.
    pub bijection_image: Option<EulerCounts>,
}

/// Audits the Case 2 step at `pg` if the prover takes Case 2 there.
pub fn case2_audit(pg: &PlaneGraph) -> Result<Case2Audit> {
    let nb = pg.boundary().len();
    if nb < 4 {
        return Ok(Case2Audit::NotApplicable {
            reason: format!("boundary of length {nb} is a base case"),
        });
    }
    if !pg.is_near_triangulation() {
        return Ok(Case2Audit::NotApplicable {
            reason: "not a near-triangulation".into(),
        });
    }
    if let Some((a, b)) = pg.find_chord() {
        return Ok(Case2Audit::NotApplicable {
            reason: format!("chord {}-{} is split", pg.label(a), pg.label(b)),
        });
    }
    let (sub, fan) = pg.delete_boundary_vertex()?;
    let d_sub = nice_orientation(&sub)?.orientation;
    let ext = Extension::new(pg, &sub, &fan);
    for &u in &fan.interior {
        if let Some((_, special)) = ext.reversal(&d_sub, u) {
            if counts_of(&special)?.diff() != 0 {
                return Ok(Case2Audit::NotApplicable {
                    reason: format!("Case 1 via {}", sub.label(u)),
                });
            }
        }
    }
    audit_case2_extension(pg, &d_sub).map(Case2Audit::Passed)
}

/// Runs every Case 2 check on the extension of `d_sub` (an orientation of
/// `G' - e`, where `G'` is `pg` minus its last boundary vertex), whether or
/// not `d_sub` is nice.
pub fn audit_case2_extension(pg: &PlaneGraph, d_sub: &Orientation) -> Result<Case2Report> {
    let (sub, fan) = pg.delete_boundary_vertex()?;
    let ext = Extension::new(pg, &sub, &fan);
    let d = ext.case2(d_sub)?;
    let g = d.graph();
    let label = |v: usize| pg.label(v).to_string();

    // Edge indices of G' - e inside G - e.
    let sub_graph = d_sub.graph();
    let to_d: Vec<usize> = sub_graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (g.index_of(sub_graph.label(a)).unwrap(), g.index_of(sub_graph.label(b)).unwrap());
            g.edge_index(x, y).expect("edge of G'")
        })
        .collect();
    let mut to_sub = vec![usize::MAX; g.edge_count()];
    for (j, &i) in to_d.iter().enumerate() {
        to_sub[i] = j;
    }
    let lift_set = |s: ArcSet| (0..to_d.len()).filter(|j| s >> j & 1 == 1).fold(0u64, |a, j| a | 1 << to_d[j]);
    let lower_set = |s: ArcSet| (0..g.edge_count()).filter(|i| s >> i & 1 == 1).fold(0u64, |a, i| a | 1 << to_sub[i]);

    let arc_bit = |a: usize, b: usize| 1u64 << g.edge_index(a, b).expect("edge at v_n");
    let prev_bit = arc_bit(ext.vn, ext.v_prev);
    let v1_bit = arc_bit(ext.vn, ext.v1);
    let u_bits: Vec<u64> = ext.interior.iter().map(|&u| arc_bit(u, ext.vn)).collect();
    let star = prev_bit | v1_bit | u_bits.iter().fold(0, |a, b| a | b);

    let all = eulerian_subgraphs(&d, MAX_EULER_ARCS)?;
    let mut away: Vec<ArcSet> = Vec::new();
    let mut through: Vec<Vec<ArcSet>> = vec![Vec::new(); u_bits.len()];
    for &h in &all {
        if h & star == 0 {
            away.push(h);
            continue;
        }
        let used: Vec<usize> = (0..u_bits.len()).filter(|&i| h & u_bits[i] != 0).collect();
        if h & v1_bit != 0 || h & prev_bit == 0 || used.len() != 1 {
            return Err(fail(
                "bookkeeping",
                format!("Eulerian sub-digraph {h:#x} meets v_n other than via one u_i and v_n -> v_(n-1)"),
            ));
        }
        through[used[0]].push(h);
    }
    let mut expected_away: Vec<ArcSet> = eulerian_subgraphs(d_sub, MAX_EULER_ARCS)?.into_iter().map(lift_set).collect();
    expected_away.sort_unstable();
    away.sort_unstable();
    if away != expected_away {
        return Err(fail(
            "bookkeeping",
            "Eulerian sub-digraphs avoiding v_n differ from those of D''",
        ));
    }
    let counts = counts_of(&d)?;
    let recursive_counts = counts_of(d_sub)?;
    let listed = parity_counts(&all);
    if listed != counts {
        return Err(fail("bookkeeping", format!("listing gives {listed:?}, counting {counts:?}")));
    }

    let mut cycles = Vec::new();
    for (i, (&u, &u_sub)) in ext.interior.iter().zip(&fan.interior).enumerate() {
        let all_cycles = directed_cycles_through(&d, u, ext.vn);
        if let Some(bad) = all_cycles.iter().find(|c| c[2] != ext.v_prev) {
            let names: Vec<String> = bad.iter().map(|&v| label(v)).collect();
            return Err(fail(
                "cycle containment",
                format!("cycle {} avoids v_n -> v_(n-1)", names.join(" -> ")),
            ));
        }
        let direct = parity_counts(&through[i]);
        let mut audit = CycleAudit {
            u: label(u),
            cycles_through_arc: all_cycles.len(),
            cycle: None,
            reversed_counts: None,
            direct,
            bijection_image: None,
        };
        let reversal = ext.reversal(d_sub, u_sub);
        let Some((path, reversed)) = reversal else {
            if !all_cycles.is_empty() || !through[i].is_empty() {
                return Err(fail("cycle search", format!("no path v_(n-1) -> {} in D''", label(u))));
            }
            cycles.push(audit);
            continue;
        };
        let to_pg = |w: usize| g.index_of(sub.label(w)).unwrap();
        let mut cycle = vec![u, ext.vn];
        cycle.extend(path[..path.len() - 1].iter().map(|&w| to_pg(w)));
        audit.cycle = Some(cycle.iter().map(|&v| label(v)).collect());

        if !is_special(&sub, &fan, &reversed) {
            return Err(fail("special", format!("D'_{} violates the special caps", label(u))));
        }
        let reversed_counts = counts_of(&reversed)?;
        audit.reversed_counts = Some(reversed_counts);
        if reversed_counts.diff() != 0 {
            return Err(fail(
                "reversed difference",
                format!("D'_{} has difference {}", label(u), reversed_counts.diff()),
            ));
        }
        if direct.even != direct.odd {
            return Err(fail(
                "direct count",
                format!("|EE_i| = {}, |OE_i| = {} for u = {}", direct.even, direct.odd, label(u)),
            ));
        }

        let c_mask = lift_set(d_sub.path_arcs(&path)) | u_bits[i] | prev_bit;
        let c_len = c_mask.count_ones();
        let mut images = Vec::with_capacity(through[i].len());
        for &h in &through[i] {
            // Reversing C_i and deleting digons leaves the symmetric difference.
            let f = h ^ c_mask;
            if f & star != 0 {
                return Err(fail("bijection", format!("image of {h:#x} still meets v_n")));
            }
            if (f.count_ones() + h.count_ones() + c_len) % 2 != 0 {
                return Err(fail("bijection", format!("parity of {h:#x} not shifted by |C_i|")));
            }
            let f_sub = lower_set(f);
            if !is_balanced(&reversed, f_sub) {
                return Err(fail("bijection", format!("image of {h:#x} is not Eulerian in D'_i")));
            }
            images.push(f_sub);
        }
        images.sort_unstable();
        images.dedup();
        if images.len() != through[i].len() {
            return Err(fail("bijection", "map is not injective"));
        }
        if images != eulerian_subgraphs(&reversed, MAX_EULER_ARCS)? {
            return Err(fail("bijection", "map misses Eulerian sub-digraphs of D'_i"));
        }
        let image_counts = parity_counts(&images);
        let (even_i, odd_i) = if c_len % 2 == 0 {
            (image_counts.even, image_counts.odd)
        } else {
            (image_counts.odd, image_counts.even)
        };
        if (even_i, odd_i) != (direct.even, direct.odd) || even_i != odd_i {
            return Err(fail(
                "bijection",
                format!("image classes {image_counts:?} do not match {direct:?}"),
            ));
        }
        audit.bijection_image = Some(image_counts);
        cycles.push(audit);
    }

    let even: u64 = recursive_counts.even + cycles.iter().map(|c| c.direct.even).sum::<u64>();
    let odd: u64 = recursive_counts.odd + cycles.iter().map(|c| c.direct.odd).sum::<u64>();
    if (even, odd) != (counts.even, counts.odd) {
        return Err(fail("bookkeeping", "EE(D) is not EE(D'') plus the EE_i(D)"));
    }
    Ok(Case2Report {
        vertex: label(ext.vn),
        v_prev: label(ext.v_prev),
        interior: ext.interior.iter().map(|&u| label(u)).collect(),
        counts,
        recursive_counts,
        cycles,
    })
}
