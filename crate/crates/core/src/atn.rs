//! Alon–Tarsi numbers of small graphs and the edge-restriction step used to
//! carry witnesses from a supergraph down to a subgraph.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{graph_coefficient_with, IndexFunction};
use crate::error::{Error, Result};
use crate::eulerian::orientation_from_index;
use crate::graph::Graph;

/// Edge limit for [`alon_tarsi_number`].
pub const DEFAULT_AT_EDGES: usize = 30;

/// Candidates evaluated per parallel batch; the first nonzero in enumeration
/// order wins, so batching never changes the answer.
const BATCH: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtResult {
    pub at_number: usize,
    /// Lexicographically least index function with values below
    /// `at_number` and a nonzero coefficient.
    pub witness: IndexFunction,
    pub coefficient: BigInt,
}

/// Dense index functions bounded by `caps` with entries summing to `total`,
/// in lexicographic order.
#[derive(Clone, Debug)]
pub struct BoundedCompositions {
    caps: Vec<u32>,
    /// `tail[i]`: sum of `caps[i..]`.
    tail: Vec<u64>,
    total: u64,
    current: Option<Vec<u32>>,
    started: bool,
}

impl BoundedCompositions {
    pub fn new(caps: Vec<u32>, total: u64) -> Self {
        let mut tail = vec![0u64; caps.len() + 1];
        for i in (0..caps.len()).rev() {
            tail[i] = tail[i + 1] + u64::from(caps[i]);
        }
        let mut it = BoundedCompositions {
            caps,
            tail,
            total,
            current: None,
            started: false,
        };
        if it.tail[0] >= total {
            let mut x = vec![0; it.caps.len()];
            it.fill_from(&mut x, 0, total);
            it.current = Some(x);
        }
        it
    }

    /// Least completion of positions `from..` summing to `rest`.
    fn fill_from(&self, x: &mut [u32], from: usize, rest: u64) {
        let mut rest = rest;
        for j in from..x.len() {
            let need = rest.saturating_sub(self.tail[j + 1]);
            x[j] = need as u32;
            rest -= need;
        }
    }

    fn advance(&self, x: &mut [u32]) -> bool {
        let n = x.len();
        let mut prefix: u64 = x.iter().map(|&a| u64::from(a)).sum();
        for i in (0..n).rev() {
            prefix -= u64::from(x[i]);
            let next = x[i] + 1;
            if next <= self.caps[i] && prefix + u64::from(next) <= self.total {
                let rest = self.total - prefix - u64::from(next);
                if rest <= self.tail[i + 1] {
                    x[i] = next;
                    self.fill_from(x, i + 1, rest);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for BoundedCompositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.started {
            let mut x = self.current.take()?;
            if self.advance(&mut x) {
                self.current = Some(x);
            }
        }
        self.started = true;
        self.current.clone()
    }
}

/// First candidate in `candidates` whose evaluation is `Some`, evaluating
/// batches in parallel. Errors abort the search.
pub(crate) fn first_in_order<I, T, F>(candidates: I, eval: F) -> Result<Option<T>>
where
    I: Iterator<Item = Vec<u32>>,
    T: Send,
    F: Fn(&[u32]) -> Result<Option<T>> + Sync,
{
    let mut candidates = candidates.peekable();
    while candidates.peek().is_some() {
        let batch: Vec<Vec<u32>> = candidates.by_ref().take(BATCH).collect();
        let results: Vec<Result<Option<T>>> = batch.par_iter().map(|x| eval(x)).collect();
        for r in results {
            if let Some(found) = r? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

/// Coefficient of `eta` if `eta` is realizable by an orientation and the
/// coefficient is nonzero.
pub(crate) fn nonzero_coefficient(g: &Graph, eta: &IndexFunction, max_edges: usize) -> Result<Option<BigInt>> {
    if orientation_from_index(g, eta).is_none() {
        return Ok(None);
    }
    let c = graph_coefficient_with(g, eta, max_edges)?;
    Ok((!c.is_zero()).then_some(c))
}

/// `AT(G)` by ascending `k`, with cap [`DEFAULT_AT_EDGES`].
pub fn alon_tarsi_number(g: &Graph, k_max: usize) -> Result<AtResult> {
    alon_tarsi_number_with(g, k_max, DEFAULT_AT_EDGES)
}

pub fn alon_tarsi_number_with(g: &Graph, k_max: usize, max_edges: usize) -> Result<AtResult> {
    if g.edge_count() > max_edges {
        return Err(Error::TooManyEdges {
            what: "Alon-Tarsi number",
            found: g.edge_count(),
            limit: max_edges,
        });
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    let start = if n == 0 { 1 } else { (m.div_ceil(n) + 1).max(1) };
    for k in start..=k_max {
        let caps: Vec<u32> = (0..n).map(|v| (k as u32 - 1).min(g.degree(v) as u32)).collect();
        let found = first_in_order(BoundedCompositions::new(caps, m as u64), |x| {
            let eta = IndexFunction::new(x.to_vec());
            Ok(nonzero_coefficient(g, &eta, max_edges)?.map(|c| (eta, c)))
        })?;
        if let Some((witness, coefficient)) = found {
            return Ok(AtResult {
                at_number: k,
                witness,
                coefficient,
            });
        }
    }
    Err(Error::ExceedsKMax(k_max))
}

/// Given `c_{G, eta} != 0` and an edge `e = uv`, returns `eta - 1_u` or
/// `eta - 1_v` (the lexicographically least one that works) together with its
/// nonzero coefficient in `P_{G-e}`.
///
/// Since `P_G = (x_v - x_u) P_{G-e}` for `u < v`, the coefficient splits as
/// `c_{G-e, eta-1_v} - c_{G-e, eta-1_u}`, so one of the two is nonzero.
pub fn restrict_index(g: &Graph, eta: &IndexFunction, e: (usize, usize)) -> Result<(IndexFunction, BigInt)> {
    restrict_index_with(g, eta, e, g.edge_count())
}

pub fn restrict_index_with(
    g: &Graph,
    eta: &IndexFunction,
    e: (usize, usize),
    max_edges: usize,
) -> Result<(IndexFunction, BigInt)> {
    let (u, v) = (e.0.min(e.1), e.0.max(e.1));
    if !g.has_edge(u, v) {
        return Err(Error::PreconditionViolated(format!(
            "{}-{} is not an edge",
            g.label(u),
            g.label(v)
        )));
    }
    let h = g.without_edge(u, v)?;
    for w in [u, v] {
        if let Some(candidate) = eta.checked_sub(&IndexFunction::unit(w)) {
            let c = graph_coefficient_with(&h, &candidate, max_edges)?;
            if !c.is_zero() {
                return Ok((candidate, c));
            }
        }
    }
    Err(Error::NoWitness(eta.to_string(), format!("{}-{}", g.label(u), g.label(v))))
}

/// Removes `added` edges from `g_tri` one at a time via [`restrict_index`].
/// The result is pointwise at most `eta` and has a nonzero coefficient in the
/// polynomial of `g_tri` minus `added`.
pub fn strip_added_edges(
    g_tri: &Graph,
    eta: &IndexFunction,
    added: &[(usize, usize)],
) -> Result<(IndexFunction, BigInt)> {
    let mut g = g_tri.clone();
    let mut eta = eta.clone();
    let mut c = graph_coefficient_with(&g, &eta, g.edge_count())?;
    if c.is_zero() {
        return Err(Error::NoWitness(eta.to_string(), "initial index function".into()));
    }
    for &e in added {
        let (next, coefficient) = restrict_index_with(&g, &eta, e, g.edge_count())?;
        g = g.without_edge(e.0, e.1)?;
        eta = next;
        c = coefficient;
    }
    Ok((eta, c))
}
