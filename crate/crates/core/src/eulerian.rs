//! Orientations, Eulerian spanning sub-digraph counts, and the signed
//! identity tying them to graph-polynomial coefficients.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::IndexFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default arc limit for Eulerian counting.
pub const DEFAULT_EULER_ARCS: usize = 30;
/// Counts are kept in `u64`; arc sets are `u64` bitmasks.
pub const MAX_EULER_ARCS: usize = 62;

/// Subset of arcs of an orientation, bit `i` standing for edge `i` of the
/// underlying graph.
pub type ArcSet = u64;

/// Sign exponent rule: `c_{G, d+(D)} = (-1)^r (|EE(D)| - |OE(D)|)` where `r`
/// counts arcs pointing from the smaller endpoint to the larger one.
///
/// Fixed by exhaustive agreement with the coefficient routine on all
/// orientations of all graphs with at most four edges (see tests).
pub const SIGN_RULE: &str = "r = number of arcs u -> v with u < v in vertex order";

/// One direction per edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    graph: Graph,
    /// `forward[i]` means edge `(u, v)`, `u < v`, is oriented `u -> v`.
    forward: Vec<bool>,
    out_degree: Vec<usize>,
}

impl Orientation {
    pub fn new(graph: Graph, forward: Vec<bool>) -> Self {
        assert_eq!(forward.len(), graph.edge_count(), "one direction per edge");
        let mut out_degree = vec![0; graph.vertex_count()];
        for (i, &(u, v)) in graph.edges().iter().enumerate() {
            out_degree[if forward[i] { u } else { v }] += 1;
        }
        Orientation {
            graph,
            forward,
            out_degree,
        }
    }

    /// Orientation from `(tail, head)` pairs; every edge of `graph` must be
    /// listed exactly once.
    pub fn from_arcs(graph: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut forward = vec![None; graph.edge_count()];
        for &(t, h) in arcs {
            let i = graph.edge_index(t, h).ok_or_else(|| {
                let name = |v: usize| graph.labels().get(v).cloned().unwrap_or_else(|| v.to_string());
                Error::EdgeSetMismatch(format!("arc {}->{} is not an edge", name(t), name(h)))
            })?;
            if forward[i].replace(t < h).is_some() {
                return Err(Error::EdgeSetMismatch(format!(
                    "edge {}-{} oriented twice",
                    graph.label(t),
                    graph.label(h)
                )));
            }
        }
        if let Some(i) = forward.iter().position(Option::is_none) {
            let (u, v) = graph.edges()[i];
            return Err(Error::EdgeSetMismatch(format!(
                "edge {}-{} not oriented",
                graph.label(u),
                graph.label(v)
            )));
        }
        Ok(Orientation::new(graph, forward.into_iter().map(Option::unwrap).collect()))
    }

    /// Orientation from label pairs.
    pub fn from_labeled_arcs(graph: Graph, arcs: &[(&str, &str)]) -> Result<Self> {
        let pairs = arcs
            .iter()
            .map(|(t, h)| Ok((graph.require(t)?, graph.require(h)?)))
            .collect::<Result<Vec<_>>>()?;
        Orientation::from_arcs(graph, &pairs)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn arc_count(&self) -> usize {
        self.forward.len()
    }

    /// `(tail, head)` of edge `i`.
    pub fn arc(&self, i: usize) -> (usize, usize) {
        let (u, v) = self.graph.edges()[i];
        if self.forward[i] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.arc_count()).map(|i| self.arc(i)).collect()
    }

    pub fn labeled_arcs(&self) -> Vec<(String, String)> {
        self.arcs()
            .into_iter()
            .map(|(t, h)| (self.graph.label(t).to_string(), self.graph.label(h).to_string()))
            .collect()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_degree[v]
    }

    pub fn out_degrees(&self) -> &[usize] {
        &self.out_degree
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.graph.degree(v) - self.out_degree[v]
    }

    /// `d+` as an index function.
    pub fn index_function(&self) -> IndexFunction {
        IndexFunction::new(self.out_degree.iter().map(|&d| d as u32).collect())
    }

    pub fn max_out_degree(&self) -> usize {
        self.out_degree.iter().copied().max().unwrap_or(0)
    }

    /// Arcs pointing from the smaller endpoint to the larger one.
    pub fn ascending_arcs(&self) -> usize {
        self.forward.iter().filter(|&&f| f).count()
    }

    /// Copy with the arcs in `set` reversed.
    pub fn reverse_arcs(&self, set: ArcSet) -> Orientation {
        let forward = self
            .forward
            .iter()
            .enumerate()
            .map(|(i, &f)| if set >> i & 1 == 1 { !f } else { f })
            .collect();
        Orientation::new(self.graph.clone(), forward)
    }

    /// Tails and heads of a directed path `from -> ... -> to`, shortest in
    /// arcs, neighbors explored in increasing order. `None` if unreachable.
    pub fn directed_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.graph.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in self.graph.neighbors(x) {
                let i = self.graph.edge_index(x, y).unwrap();
                if self.arc(i).0 == x && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Arc set of the edges along a vertex path.
    pub fn path_arcs(&self, path: &[usize]) -> ArcSet {
        path.windows(2)
            .map(|w| 1u64 << self.graph.edge_index(w[0], w[1]).expect("path edge"))
            .fold(0, |a, b| a | b)
    }
}

/// `|EE(D)|` and `|OE(D)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCounts {
    pub even: u64,
    pub odd: u64,
}

impl EulerCounts {
    pub fn diff(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

fn check_cap(d: &Orientation, max_arcs: usize) -> Result<()> {
    let limit = max_arcs.min(MAX_EULER_ARCS);
    if d.arc_count() > limit {
        return Err(Error::TooManyEdges {
            what: "Eulerian counting",
            found: d.arc_count(),
            limit,
        });
    }
    Ok(())
}

/// Counts spanning Eulerian sub-digraphs by parity (default cap
/// [`DEFAULT_EULER_ARCS`]).
pub fn eulerian_counts(d: &Orientation) -> Result<EulerCounts> {
    eulerian_counts_with(d, DEFAULT_EULER_ARCS)
}

/// Branches over arcs in elimination order tracking each vertex's
/// out-minus-in imbalance; a branch dies once some vertex's imbalance exceeds
/// its number of undecided arcs. Branches with equal imbalance vectors are
/// merged, carrying their even/odd tallies.
pub fn eulerian_counts_with(d: &Orientation, max_arcs: usize) -> Result<EulerCounts> {
    check_cap(d, max_arcs)?;
    let g = d.graph();
    let n = g.vertex_count();
    let mut remaining: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut states: HashMap<Vec<i8>, (u64, u64)> = HashMap::from([(vec![0; n], (1, 0))]);
    for idx in g.elimination_edge_order() {
        let (t, h) = d.arc(idx);
        remaining[t] -= 1;
        remaining[h] -= 1;
        let (rt, rh) = (remaining[t] as i32, remaining[h] as i32);
        let mut next: HashMap<Vec<i8>, (u64, u64)> = HashMap::with_capacity(states.len() * 2);
        for (state, (even, odd)) in states {
            if i32::from(state[t]).abs() <= rt && i32::from(state[h]).abs() <= rh {
                let e = next.entry(state.clone()).or_insert((0, 0));
                e.0 += even;
                e.1 += odd;
            }
            let mut s = state;
            s[t] += 1;
            s[h] -= 1;
            if i32::from(s[t]).abs() <= rt && i32::from(s[h]).abs() <= rh {
                let e = next.entry(s).or_insert((0, 0));
                e.0 += odd;
                e.1 += even;
            }
        }
        states = next;
    }
    let (even, odd) = states.get(&vec![0; n]).copied().unwrap_or((0, 0));
    Ok(EulerCounts { even, odd })
}

/// `|EE(D)| - |OE(D)|`.
pub fn at_diff(d: &Orientation) -> Result<i64> {
    Ok(eulerian_counts(d)?.diff())
}

pub fn at_diff_with(d: &Orientation, max_arcs: usize) -> Result<i64> {
    Ok(eulerian_counts_with(d, max_arcs)?.diff())
}

/// `(-1)^r * at_diff(D)` under [`SIGN_RULE`]; equals `c_{G, d+(D)}`.
pub fn signed_diff(d: &Orientation) -> Result<i64> {
    signed_diff_with(d, DEFAULT_EULER_ARCS)
}

pub fn signed_diff_with(d: &Orientation, max_arcs: usize) -> Result<i64> {
    let diff = at_diff_with(d, max_arcs)?;
    Ok(if d.ascending_arcs() % 2 == 0 { diff } else { -diff })
}

/// Every spanning Eulerian sub-digraph as an arc set, in increasing order.
pub fn eulerian_subgraphs(d: &Orientation, max_arcs: usize) -> Result<Vec<ArcSet>> {
    check_cap(d, max_arcs)?;
    let g = d.graph();
    let order = g.elimination_edge_order();
    // remaining_after[k][v]: arcs at v among order[k+1..].
    let n = g.vertex_count();
    let mut remaining_after = vec![vec![0i32; n]; order.len()];
    let mut rem: Vec<i32> = (0..n).map(|v| g.degree(v) as i32).collect();
    for (k, &idx) in order.iter().enumerate() {
        let (a, b) = g.edges()[idx];
        rem[a] -= 1;
        rem[b] -= 1;
        remaining_after[k] = rem.clone();
    }
    struct Search<'a> {
        d: &'a Orientation,
        order: &'a [usize],
        remaining_after: &'a [Vec<i32>],
        imbalance: Vec<i32>,
        out: Vec<ArcSet>,
    }
    impl Search<'_> {
        fn go(&mut self, k: usize, set: ArcSet) {
            if k == self.order.len() {
                self.out.push(set);
                return;
            }
            let idx = self.order[k];
            let (t, h) = self.d.arc(idx);
            let rem = &self.remaining_after[k];
            if self.imbalance[t].abs() <= rem[t] && self.imbalance[h].abs() <= rem[h] {
                self.go(k + 1, set);
            }
            self.imbalance[t] += 1;
            self.imbalance[h] -= 1;
            if self.imbalance[t].abs() <= rem[t] && self.imbalance[h].abs() <= rem[h] {
                self.go(k + 1, set | 1 << idx);
            }
            self.imbalance[t] -= 1;
            self.imbalance[h] += 1;
        }
    }
    let mut s = Search {
        d,
        order: &order,
        remaining_after: &remaining_after,
        imbalance: vec![0; n],
        out: Vec::new(),
    };
    s.go(0, 0);
    let mut out = s.out;
    out.sort_unstable();
    Ok(out)
}

/// True iff every vertex has equal in- and out-degree within `set`.
pub fn is_balanced(d: &Orientation, set: ArcSet) -> bool {
    let mut imbalance = vec![0i64; d.graph().vertex_count()];
    for i in 0..d.arc_count() {
        if set >> i & 1 == 1 {
            let (t, h) = d.arc(i);
            imbalance[t] += 1;
            imbalance[h] -= 1;
        }
    }
    imbalance.iter().all(|&x| x == 0)
}

/// Some orientation of `g` with out-degrees exactly `eta`, or `None`.
///
/// Starts from the orientation with every arc ascending and repeatedly
/// reverses a shortest directed path from the least over-full vertex to the
/// nearest under-full one.
pub fn orientation_from_index(g: &Graph, eta: &IndexFunction) -> Option<Orientation> {
    let n = g.vertex_count();
    if eta.support().any(|v| v >= n) || eta.total() != g.edge_count() as u64 {
        return None;
    }
    let target: Vec<usize> = (0..n).map(|v| eta.get(v) as usize).collect();
    if (0..n).any(|v| target[v] > g.degree(v)) {
        return None;
    }
    let mut d = Orientation::new(g.clone(), vec![true; g.edge_count()]);
    while let Some(v) = (0..n).find(|&v| d.out_degree(v) > target[v]) {
        let mut parent = vec![usize::MAX; n];
        parent[v] = v;
        let mut queue = VecDeque::from([v]);
        let mut sink = None;
        while let Some(x) = queue.pop_front() {
            if d.out_degree(x) < target[x] {
                sink = Some(x);
                break;
            }
            for &y in g.neighbors(x) {
                let i = g.edge_index(x, y).unwrap();
                if d.arc(i).0 == x && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let w = sink?;
        let mut path = vec![w];
        let mut cur = w;
        while cur != v {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        d = d.reverse_arcs(d.path_arcs(&path));
    }
    Some(d)
}
