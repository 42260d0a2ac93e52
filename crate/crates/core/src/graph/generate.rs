//! Named graph families and exhaustive small-graph generators.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::graph::{Graph, PlaneGraph};

/// Cycle `C_n` on vertices `0..n`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::numbered(n, &edges).expect("n >= 3")
}

/// Complete graph `K_n` on vertices `0..n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::numbered(n, &edges).unwrap()
}

/// Path `P_n` on vertices `0..n`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::numbered(n, &edges).unwrap()
}

/// Triangle `v1 v2 v3` with outer face `(v1, v2, v3)` and `e = v1 v2`.
pub fn triangle() -> PlaneGraph {
    let faces = vec![vec![0, 1, 2], vec![0, 2, 1]];
    PlaneGraph::from_faces(vec!["v1", "v2", "v3"], &faces, &[0, 1, 2], (0, 1)).unwrap()
}

/// `K4` with outer face `(v1, v2, v3)` and interior hub `u`.
pub fn embedded_k4() -> PlaneGraph {
    let faces = vec![vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3], vec![0, 2, 1]];
    PlaneGraph::from_faces(vec!["v1", "v2", "v3", "u"], &faces, &[0, 1, 2], (0, 1)).unwrap()
}

/// The plane cycle `C_n` (vertices `0..n`, boundary edge `0 1`).
pub fn cycle_plane(n: usize) -> PlaneGraph {
    let fwd: Vec<usize> = (0..n).collect();
    let rev: Vec<usize> = (0..n).rev().collect();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    PlaneGraph::from_faces(labels, &[fwd.clone(), rev], &fwd, (0, 1)).unwrap()
}

/// Wheel with `rim` rim vertices `0..rim` and interior hub `h`; the outer
/// face is the rim and the boundary edge is `0 1`.
pub fn wheel(rim: usize) -> PlaneGraph {
    let hub = rim;
    let mut faces: Vec<Vec<usize>> = (0..rim).map(|i| vec![i, (i + 1) % rim, hub]).collect();
    let outer: Vec<usize> = (0..rim).rev().collect();
    faces.push(outer.clone());
    let mut labels: Vec<String> = (0..rim).map(|i| i.to_string()).collect();
    labels.push("h".into());
    PlaneGraph::from_faces(labels, &faces, &outer, (0, 1)).unwrap()
}

/// Octahedron: apex `0`, equator `1..=4`, apex `5`; outer face `(0, 1, 2)`.
pub fn octahedron() -> PlaneGraph {
    triangulation_plane(6, &octahedron_triangles(), 0)
}

fn octahedron_triangles() -> Vec<[usize; 3]> {
    let ring = |i: usize| 1 + i % 4;
    let mut t = Vec::new();
    for i in 0..4 {
        t.push([0, ring(i), ring(i + 1)]);
    }
    for i in 0..4 {
        t.push([5, ring(i + 1), ring(i)]);
    }
    t
}

/// Oriented faces of the icosahedron: apex `0`, upper ring `1..=5`, lower
/// ring `6..=10`, apex `11`.
pub fn icosahedron_triangles() -> Vec<[usize; 3]> {
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut t = Vec::new();
    for i in 0..5 {
        t.push([0, up(i), up(i + 1)]);
        t.push([up(i), low(i), up(i + 1)]);
        t.push([up(i + 1), low(i), low(i + 1)]);
        t.push([11, low(i + 1), low(i)]);
    }
    t
}

/// Icosahedron with outer face `(0, 1, 2)`.
pub fn icosahedron() -> PlaneGraph {
    triangulation_plane(12, &icosahedron_triangles(), 0)
}

/// Plane graph from a sphere triangulation on `0..n`, with triangle
/// `outer` as the outer face and its first edge as the boundary edge.
pub fn triangulation_plane(n: usize, triangles: &[[usize; 3]], outer: usize) -> PlaneGraph {
    let faces: Vec<Vec<usize>> = triangles.iter().map(|t| t.to_vec()).collect();
    let o = triangles[outer];
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    PlaneGraph::from_faces(labels, &faces, &o, (o[0], o[1])).expect("valid triangulation")
}

/// Removes vertex `v` from a sphere triangulation on `0..n`. The result is a
/// near-triangulation whose outer face is the link of `v`; labels keep the
/// original vertex numbers.
pub fn punctured_triangulation(n: usize, triangles: &[[usize; 3]], v: usize) -> PlaneGraph {
    let mut next = BTreeMap::new();
    let mut faces = Vec::new();
    for t in triangles {
        if let Some(p) = t.iter().position(|&w| w == v) {
            next.insert(t[(p + 1) % 3], t[(p + 2) % 3]);
        } else {
            faces.push(t.to_vec());
        }
    }
    let start = *next.keys().next().expect("v has neighbors");
    let mut link = vec![start];
    let mut cur = next[&start];
    while cur != start {
        link.push(cur);
        cur = next[&cur];
    }
    faces.push(link.clone());
    let reindex = |w: usize| if w > v { w - 1 } else { w };
    let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.iter().map(|&w| reindex(w)).collect()).collect();
    let link: Vec<usize> = link.iter().map(|&w| reindex(w)).collect();
    let labels: Vec<String> = (0..n).filter(|&w| w != v).map(|w| w.to_string()).collect();
    PlaneGraph::from_faces(labels, &faces, &link, (link[0], link[1])).expect("link of a vertex is a cycle")
}

fn rotation_of(n: usize, triangles: &[[usize; 3]]) -> Vec<Vec<usize>> {
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for t in triangles {
        for k in 0..3 {
            succ[t[k]].insert(t[(k + 2) % 3], t[(k + 1) % 3]);
        }
    }
    succ.iter()
        .map(|m| {
            let start = *m.keys().next().unwrap();
            let mut rot = vec![start];
            let mut cur = m[&start];
            while cur != start {
                rot.push(cur);
                cur = m[&cur];
            }
            rot
        })
        .collect()
}

/// Canonical code of an embedded connected graph, invariant under relabeling
/// and reflection: the lexicographically least breadth-first code over all
/// starting darts and both orientations.
pub fn canonical_code(rotation: &[Vec<usize>]) -> Vec<usize> {
    let n = rotation.len();
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        for &w in &rotation[v] {
            for mirrored in [false, true] {
                let mut number = vec![usize::MAX; n];
                let mut first = vec![usize::MAX; n];
                number[v] = 0;
                first[v] = w;
                let mut next = 1;
                let mut queue = VecDeque::from([v]);
                let mut code = Vec::new();
                while let Some(x) = queue.pop_front() {
                    let rot = &rotation[x];
                    let d = rot.len();
                    let p = rot.iter().position(|&y| y == first[x]).unwrap();
                    for s in 0..d {
                        let y = if mirrored { rot[(p + d - s) % d] } else { rot[(p + s) % d] };
                        if number[y] == usize::MAX {
                            number[y] = next;
                            first[y] = x;
                            next += 1;
                            queue.push_back(y);
                        }
                        code.push(number[y]);
                    }
                    code.push(usize::MAX);
                }
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap_or_default()
}

fn flip(triangles: &[[usize; 3]], degree: &[usize], u: usize, v: usize) -> Option<Vec<[usize; 3]>> {
    let find = |a: usize, b: usize| {
        triangles.iter().enumerate().find_map(|(i, t)| {
            (0..3).find(|&k| t[k] == a && t[(k + 1) % 3] == b).map(|k| (i, t[(k + 2) % 3]))
        })
    };
    let (i1, a) = find(u, v)?;
    let (i2, b) = find(v, u)?;
    if a == b || degree[u] < 4 || degree[v] < 4 {
        return None;
    }
    let adjacent = triangles
        .iter()
        .any(|t| (0..3).any(|k| t[k] == a && t[(k + 1) % 3] == b));
    if adjacent {
        return None;
    }
    let mut out = triangles.to_vec();
    out[i1] = [a, u, b];
    out[i2] = [b, v, a];
    Some(out)
}

/// All combinatorially distinct sphere triangulations on `n` vertices
/// (`4 <= n`), up to isomorphism and reflection, as oriented triangle lists.
///
/// Generated by stacking a vertex into a face of each triangulation on
/// `n - 1` vertices and closing under edge flips.
pub fn triangulations(n: usize) -> Vec<Vec<[usize; 3]>> {
    assert!(n >= 4, "sphere triangulations need at least four vertices");
    if n == 4 {
        return vec![vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]];
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut found: Vec<(Vec<usize>, Vec<[usize; 3]>)> = Vec::new();
    let mut queue = VecDeque::new();
    for smaller in triangulations(n - 1) {
        let [a, b, c] = smaller[0];
        let x = n - 1;
        let mut t = smaller[1..].to_vec();
        t.extend([[a, b, x], [b, c, x], [c, a, x]]);
        let code = canonical_code(&rotation_of(n, &t));
        if seen.insert(code.clone()) {
            found.push((code, t.clone()));
            queue.push_back(t);
        }
    }
    while let Some(t) = queue.pop_front() {
        let mut degree = vec![0; n];
        let mut edges = Vec::new();
        for tri in &t {
            for k in 0..3 {
                let (p, q) = (tri[k], tri[(k + 1) % 3]);
                if p < q {
                    edges.push((p, q));
                    degree[p] += 1;
                    degree[q] += 1;
                }
            }
        }
        for (p, q) in edges {
            if let Some(f) = flip(&t, &degree, p, q) {
                let code = canonical_code(&rotation_of(n, &f));
                if seen.insert(code.clone()) {
                    found.push((code, f.clone()));
                    queue.push_back(f);
                }
            }
        }
    }
    found.sort();
    found.into_iter().map(|(_, t)| t).collect()
}

/// The named plane test corpus: every sphere triangulation on 4 to 8
/// vertices and the same with vertex `0` removed, wheels with 3 to 11 rim
/// vertices, cycles `C_4` to `C_8`, the octahedron, the icosahedron and the
/// icosahedron minus a vertex.
pub fn corpus() -> Vec<(String, PlaneGraph)> {
    let mut out = vec![
        ("triangle".to_string(), triangle()),
        ("k4".to_string(), embedded_k4()),
    ];
    for n in 4..=8 {
        for (i, t) in triangulations(n).iter().enumerate() {
            out.push((format!("tri{n}-{i}"), triangulation_plane(n, t, 0)));
            out.push((format!("tri{n}-{i}-minus0"), punctured_triangulation(n, t, 0)));
        }
    }
    for rim in 3..=11 {
        out.push((format!("wheel{rim}"), wheel(rim)));
    }
    for n in 4..=8 {
        out.push((format!("c{n}"), cycle_plane(n)));
    }
    out.push(("octahedron".to_string(), octahedron()));
    out.push(("icosahedron".to_string(), icosahedron()));
    out.push((
        "icosahedron-minus0".to_string(),
        punctured_triangulation(12, &icosahedron_triangles(), 0),
    ));
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices (`n <= 6`), vertices labeled `0..n`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive generation is limited to six vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut pair_index = vec![vec![0; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = k;
        pair_index[j][i] = k;
    }
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::numbered(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                edges
                    .iter()
                    .fold(0u32, |acc, &(i, j)| acc | 1 << pair_index[p[i]][p[j]])
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families_are_valid_embeddings() {
        let k4 = embedded_k4();
        assert_eq!(k4.face_count(), 4);
        assert!(k4.is_near_triangulation());
        assert_eq!(octahedron().face_count(), 8);
        let ico = icosahedron();
        assert_eq!(ico.graph().edge_count(), 30);
        assert_eq!(ico.face_count(), 20);
        assert!((0..12).all(|v| ico.graph().degree(v) == 5));
        let w = wheel(6);
        assert_eq!(w.boundary().len(), 6);
        assert!(w.is_near_triangulation());
        assert!(!cycle_plane(4).is_near_triangulation());
    }

    #[test]
    fn punctured_icosahedron_has_pentagonal_boundary() {
        let p = punctured_triangulation(12, &icosahedron_triangles(), 0);
        assert_eq!(p.graph().vertex_count(), 11);
        assert_eq!(p.graph().edge_count(), 25);
        assert_eq!(p.boundary().len(), 5);
        assert!(p.is_near_triangulation());
    }

    #[test]
    fn connected_graph_counts_match_known_values() {
        // OEIS A001349.
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn triangulation_counts_match_known_values() {
        // OEIS A000109.
        let counts: Vec<usize> = (4..=8).map(|n| triangulations(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn corpus_is_large_and_within_caps() {
        let c = corpus();
        assert!(c.len() >= 50);
        assert!(c.iter().all(|(_, pg)| pg.graph().vertex_count() <= 12 && pg.graph().edge_count() <= 30));
    }
}
