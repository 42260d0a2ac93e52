//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's counting or coefficient routines.
#![allow(dead_code)]

use alon_tarsi::Graph;
use rand::Rng;

/// Coefficient of `x^eta` in `prod (x_v - x_u)` by summing over all `2^m`
/// choices of one variable per factor.
pub fn brute_coefficient(g: &Graph, eta: &[u32]) -> i64 {
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut total = 0;
    for mask in 0u64..(1 << m) {
        let mut exp = vec![0u32; n];
        let mut sign = 1;
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                exp[v] += 1;
            } else {
                exp[u] += 1;
                sign = -sign;
            }
        }
        if exp == eta {
            total += sign;
        }
    }
    total
}

/// `(|EE|, |OE|)` by checking all `2^m` arc subsets; `forward[i]` orients
/// edge `i` from its smaller endpoint.
pub fn brute_counts(g: &Graph, forward: &[bool]) -> (u64, u64) {
    let (mut even, mut odd) = (0, 0);
    for mask in 0u64..(1 << g.edge_count()) {
        let mut bal = vec![0i32; g.vertex_count()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (t, h) = if forward[i] { (u, v) } else { (v, u) };
                bal[t] += 1;
                bal[h] -= 1;
            }
        }
        if bal.iter().all(|&b| b == 0) {
            if mask.count_ones() % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    (even, odd)
}

pub fn out_degrees(g: &Graph, forward: &[bool]) -> Vec<u32> {
    let mut d = vec![0; g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        d[if forward[i] { u } else { v }] += 1;
    }
    d
}

/// `AT(G)` straight from the definition: the least `k` such that some `eta`
/// below `k` has a nonzero brute-force coefficient.
pub fn brute_at(g: &Graph) -> usize {
    let n = g.vertex_count();
    let m = g.edge_count() as u32;
    for k in 1..=n.max(1) + 1 {
        let mut eta = vec![0u32; n];
        loop {
            if eta.iter().sum::<u32>() == m && brute_coefficient(g, &eta) != 0 {
                return k;
            }
            let mut i = 0;
            while i < n && eta[i] + 1 >= k as u32 {
                eta[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            eta[i] += 1;
        }
    }
    unreachable!("AT(G) <= n + 1")
}

/// Chromatic number by trying every coloring.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    for k in 1..=n.max(1) {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<u64> = (0..n)
                .map(|_| {
                    let x = c % k as u64;
                    c /= k as u64;
                    x
                })
                .collect();
            if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    n
}

/// True iff some choice from the lists is proper.
pub fn brute_colorable(g: &Graph, lists: &[Vec<u32>]) -> bool {
    fn rec(g: &Graph, lists: &[Vec<u32>], colors: &mut Vec<u32>) -> bool {
        let v = colors.len();
        if v == lists.len() {
            return true;
        }
        for &c in &lists[v] {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors.push(c);
                if rec(g, lists, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    rec(g, lists, &mut Vec::new())
}

/// Whether every assignment of `k`-subsets of `1..=universe` is colorable.
pub fn brute_choosable(g: &Graph, k: usize, universe: u32) -> bool {
    let subsets: Vec<Vec<u32>> = (0u32..1 << universe)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..universe).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    let n = g.vertex_count();
    let mut idx = vec![0usize; n];
    loop {
        let lists: Vec<Vec<u32>> = idx.iter().map(|&i| subsets[i].clone()).collect();
        if !brute_colorable(g, &lists) {
            return false;
        }
        let mut i = 0;
        while i < n && idx[i] + 1 == subsets.len() {
            idx[i] = 0;
            i += 1;
        }
        if i == n {
            return true;
        }
        idx[i] += 1;
    }
}

/// Random connected graph on `n` vertices with `m` edges (`n - 1 <= m`).
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|e| !edges.contains(e))
        .collect();
    while edges.len() < m && !candidates.is_empty() {
        let i = rng.gen_range(0..candidates.len());
        edges.push(candidates.swap_remove(i));
    }
    Graph::numbered(n, &edges).unwrap()
}

pub fn random_forward<R: Rng>(rng: &mut R, m: usize) -> Vec<bool> {
    (0..m).map(|_| rng.gen()).collect()
}
