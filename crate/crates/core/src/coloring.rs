//! List colorings and exhaustive choice numbers of tiny graphs.

use std::collections::{BTreeMap, HashMap};

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Color = u32;

/// Graphs larger than this are rejected by [`choice_number`].
pub const MAX_CHOICE_VERTICES: usize = 6;

/// One nonempty list of colors per vertex (sorted, without repeats).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self> {
        let mut lists = lists;
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(Error::InvalidGraph(format!("list of vertex {v} is empty")));
            }
        }
        Ok(ListAssignment { lists })
    }

    pub fn from_labeled(g: &Graph, map: &BTreeMap<String, Vec<Color>>) -> Result<Self> {
        if let Some(k) = map.keys().find(|k| g.index_of(k).is_none()) {
            return Err(Error::UnknownVertex(k.clone()));
        }
        let lists = g
            .labels()
            .iter()
            .map(|l| {
                map.get(l)
                    .cloned()
                    .ok_or_else(|| Error::InvalidGraph(format!("no list for vertex {l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ListAssignment::new(lists)
    }

    pub fn to_labeled(&self, g: &Graph) -> BTreeMap<String, Vec<Color>> {
        self.lists
            .iter()
            .enumerate()
            .map(|(v, l)| (g.label(v).to_string(), l.clone()))
            .collect()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

/// Lists of the given sizes, each drawn uniformly from `1..=palette`.
pub fn random_lists<R: Rng>(sizes: &[usize], palette: u32, rng: &mut R) -> ListAssignment {
    let lists = sizes
        .iter()
        .map(|&s| {
            assert!(s >= 1 && s <= palette as usize, "list size must fit the palette");
            sample(rng, palette as usize, s).into_iter().map(|c| c as Color + 1).collect()
        })
        .collect();
    ListAssignment::new(lists).expect("nonempty lists")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<Color>,
}

impl Coloring {
    pub fn to_labeled(&self, g: &Graph) -> BTreeMap<String, Color> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, &c)| (g.label(v).to_string(), c))
            .collect()
    }
}

/// Endpoints of every edge differ and every color comes from its list.
pub fn is_proper(g: &Graph, lists: &ListAssignment, coloring: &Coloring) -> bool {
    coloring.colors.len() == g.vertex_count()
        && lists.len() == g.vertex_count()
        && (0..g.vertex_count()).all(|v| lists.list(v).contains(&coloring.colors[v]))
        && g.edges().iter().all(|&(u, v)| coloring.colors[u] != coloring.colors[v])
}

/// Exact backtracking search, always extending the uncolored vertex with the
/// fewest remaining options.
pub fn find_list_coloring(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(Error::InvalidGraph(format!(
            "{} lists for {n} vertices",
            lists.len()
        )));
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    if color_rec(g, lists, &mut colors, 0) {
        Ok(Coloring {
            colors: colors.into_iter().map(Option::unwrap).collect(),
        })
    } else {
        Err(Error::NoColoring)
    }
}

fn available(g: &Graph, lists: &ListAssignment, colors: &[Option<Color>], v: usize) -> Vec<Color> {
    lists
        .list(v)
        .iter()
        .copied()
        .filter(|c| g.neighbors(v).iter().all(|&w| colors[w] != Some(*c)))
        .collect()
}

fn color_rec(g: &Graph, lists: &ListAssignment, colors: &mut [Option<Color>], done: usize) -> bool {
    if done == colors.len() {
        return true;
    }
    let (v, options) = (0..colors.len())
        .filter(|&v| colors[v].is_none())
        .map(|v| (v, available(g, lists, colors, v)))
        .min_by_key(|(_, o)| o.len())
        .unwrap();
    for c in options {
        colors[v] = Some(c);
        if color_rec(g, lists, colors, done + 1) {
            return true;
        }
    }
    colors[v] = None;
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceResult {
    pub choice_number: usize,
    /// An assignment of `choice_number - 1` colors per vertex with no proper
    /// coloring, when `choice_number > 1`.
    pub counterexample: Option<ListAssignment>,
}

/// Least `k <= k_max` such that `g` is `k`-choosable.
pub fn choice_number(g: &Graph, k_max: usize) -> Result<ChoiceResult> {
    if g.vertex_count() > MAX_CHOICE_VERTICES {
        return Err(Error::TooLarge(format!(
            "choice number is exhaustive and limited to {MAX_CHOICE_VERTICES} vertices, got {}",
            g.vertex_count()
        )));
    }
    let mut counterexample = None;
    for k in 1..=k_max {
        match choosability_counterexample(g, k)? {
            None => {
                return Ok(ChoiceResult {
                    choice_number: k,
                    counterexample,
                })
            }
            Some(bad) => counterexample = Some(bad),
        }
    }
    Err(Error::ExceedsKMax(k_max))
}

/// `None` if every assignment of `k`-lists admits a proper coloring, otherwise
/// an assignment that does not.
///
/// Only the `k`-core can fail, and a failing core whose one-vertex-deleted
/// subgraphs are all `k`-choosable has a bad assignment in which no color of a
/// vertex is missing from all of its neighbors' lists. Assignments are listed
/// up to renaming colors.
pub fn choosability_counterexample(g: &Graph, k: usize) -> Result<Option<ListAssignment>> {
    let n = g.vertex_count();
    if n > MAX_CHOICE_VERTICES {
        return Err(Error::TooLarge(format!(
            "choosability check is limited to {MAX_CHOICE_VERTICES} vertices, got {n}"
        )));
    }
    if k == 0 {
        return Ok((n > 0).then(|| ListAssignment { lists: vec![vec![1]; n] }));
    }
    let mut memo = HashMap::new();
    let full = (1u64 << n) - 1;
    let Some(partial) = bad_assignment(g, k, full, &mut memo) else {
        return Ok(None);
    };
    // Vertices outside the failing core get disjoint fresh lists.
    let mut next = partial.iter().flatten().flatten().copied().max().unwrap_or(0) + 1;
    let lists = partial
        .into_iter()
        .map(|l| {
            l.unwrap_or_else(|| {
                let l: Vec<Color> = (next..next + k as Color).collect();
                next += k as Color;
                l
            })
        })
        .collect();
    Ok(Some(ListAssignment::new(lists)?))
}

type Partial = Vec<Option<Vec<Color>>>;

fn k_core(g: &Graph, k: usize, mut mask: u64) -> u64 {
    loop {
        let drop = (0..g.vertex_count()).find(|&v| {
            mask >> v & 1 == 1 && g.neighbors(v).iter().filter(|&&w| mask >> w & 1 == 1).count() < k
        });
        match drop {
            Some(v) => mask &= !(1 << v),
            None => return mask,
        }
    }
}

fn bad_assignment(g: &Graph, k: usize, mask: u64, memo: &mut HashMap<u64, Option<Partial>>) -> Option<Partial> {
    let core = k_core(g, k, mask);
    if core == 0 {
        return None;
    }
    if let Some(r) = memo.get(&core) {
        return r.clone();
    }
    let mut result = None;
    for v in 0..g.vertex_count() {
        if core >> v & 1 == 1 {
            if let Some(r) = bad_assignment(g, k, core & !(1 << v), memo) {
                result = Some(r);
                break;
            }
        }
    }
    if result.is_none() {
        result = CoreSearch::new(g, k, core).run();
    }
    memo.insert(core, result.clone());
    result
}

struct CoreSearch<'g> {
    g: &'g Graph,
    k: usize,
    /// Core vertices in breadth-first order.
    order: Vec<usize>,
    /// Neighbors within the core, as positions in `order`.
    nbrs: Vec<Vec<usize>>,
    lists: Vec<Vec<Color>>,
}

impl<'g> CoreSearch<'g> {
    fn new(g: &'g Graph, k: usize, core: u64) -> Self {
        let in_core = |v: usize| core >> v & 1 == 1;
        let mut order = Vec::new();
        let mut seen = vec![false; g.vertex_count()];
        for s in (0..g.vertex_count()).filter(|&v| in_core(v)) {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &y in g.neighbors(x) {
                    if in_core(y) && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut pos = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let nbrs = order
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| in_core(w)).map(|&w| pos[w]).collect())
            .collect();
        CoreSearch {
            g,
            k,
            order,
            nbrs,
            lists: Vec::new(),
        }
    }

    fn run(mut self) -> Option<Partial> {
        if self.place(0, 0) {
            let mut out: Partial = vec![None; self.g.vertex_count()];
            for (i, &v) in self.order.iter().enumerate() {
                out[v] = Some(self.lists[i].iter().map(|c| c + 1).collect());
            }
            Some(out)
        } else {
            None
        }
    }

    /// True once a bad assignment is found (left in `self.lists`).
    fn place(&mut self, p: usize, used: Color) -> bool {
        if p == self.order.len() {
            return !self.colorable();
        }
        let has_later = self.nbrs[p].iter().any(|&q| q > p);
        let k = self.k;
        let min_old = if has_later { 0 } else { k };
        for j in (min_old..=k.min(used as usize)).rev() {
            let fresh = (k - j) as Color;
            let mut chosen = Vec::with_capacity(k);
            if self.choose(p, used, j, 0, fresh, &mut chosen) {
                return true;
            }
        }
        false
    }

    fn choose(&mut self, p: usize, used: Color, j: usize, from: Color, fresh: Color, chosen: &mut Vec<Color>) -> bool {
        if chosen.len() == j {
            let mut list = chosen.clone();
            list.extend(used..used + fresh);
            self.lists.push(list);
            if self.covered(p) && self.place(p + 1, used + fresh) {
                return true;
            }
            self.lists.pop();
            return false;
        }
        let need = j - chosen.len();
        for c in from..used {
            if (used - c) < need as Color {
                break;
            }
            chosen.push(c);
            if self.choose(p, used, j, c + 1, fresh, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Every vertex placed so far whose neighbors are all placed shares each
    /// of its colors with some neighbor.
    fn covered(&self, p: usize) -> bool {
        (0..=p).filter(|&x| self.nbrs[x].iter().all(|&q| q <= p)).all(|x| {
            self.lists[x]
                .iter()
                .all(|c| self.nbrs[x].iter().any(|&q| self.lists[q].contains(c)))
        })
    }

    fn colorable(&self) -> bool {
        let (sub, _) = self.g.induced(&self.order);
        // `induced` keeps relative vertex order; map lists accordingly.
        let mut sorted: Vec<(usize, usize)> = self.order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        sorted.sort_unstable();
        let lists = sorted.iter().map(|&(_, i)| self.lists[i].clone()).collect();
        let lists = ListAssignment { lists };
        find_list_coloring(&sub, &lists).is_ok()
    }
}
