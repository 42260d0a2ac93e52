//! Plane graphs given by a rotation system plus a distinguished outer face.
//!
//! Face tracing convention: the dart following `u -> v` on its face is
//! `v -> w`, where `w` is the successor of `u` in the cyclic rotation at `v`.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An embedded, 2-connected simple graph with boundary cycle `B(G)`.
///
/// The boundary is stored as `(v1, v2, ..., vn)` where `v1 v2` is the
/// designated boundary edge. The single-edge graph `K2` is admitted as a
/// degenerate member whose boundary is `(v1, v2)`.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    boundary: Vec<usize>,
    on_boundary: Vec<bool>,
    faces: Vec<Vec<usize>>,
    /// `face_of[v][p]` is the face containing the dart `v -> rotation[v][p]`.
    face_of: Vec<Vec<usize>>,
    outer: usize,
}

/// Neighbors of the deleted boundary vertex `v_n`, in rotation order
/// `(v1, u_1, ..., u_k, v_{n-1})`. Indices refer to the graph left after the
/// deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborFan {
    pub removed: String,
    pub v1: usize,
    pub interior: Vec<usize>,
    pub v_prev: usize,
}

fn cyclic_eq(face: &[usize], cycle: &[usize]) -> bool {
    let m = face.len();
    if m != cycle.len() {
        return false;
    }
    (0..m).any(|s| (0..m).all(|t| face[(s + t) % m] == cycle[t]))
}

impl PlaneGraph {
    /// Validates a rotation system and outer face.
    ///
    /// `rotation[v]` lists the neighbors of `v` in cyclic order. `outer_face`
    /// may be given in either direction; `boundary_edge = (v1, v2)` fixes the
    /// start and direction of the stored boundary cycle.
    pub fn new<S: Into<String>>(
        labels: Vec<S>,
        rotation: Vec<Vec<usize>>,
        outer_face: &[usize],
        boundary_edge: (usize, usize),
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        if rotation.len() != n {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                rotation.len(),
                n
            )));
        }
        let mut edges = Vec::new();
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidRotation(format!(
                    "repeated neighbor in rotation of `{}`",
                    labels[v]
                )));
            }
            for &w in rot {
                if w >= n || w == v {
                    return Err(Error::InvalidRotation(format!(
                        "bad neighbor in rotation of `{}`",
                        labels[v]
                    )));
                }
                if !rotation[w].contains(&v) {
                    return Err(Error::InvalidRotation(format!(
                        "`{}` lists `{}` but not conversely",
                        labels[v], labels[w]
                    )));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::new(labels, &edges)?;
        if n < 2 {
            return Err(Error::InvalidGraph("a plane graph needs at least two vertices".into()));
        }
        if !graph.is_connected() {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }

        let (faces, face_of) = trace_faces(&rotation);
        let euler = n as i64 - graph.edge_count() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NonPlanarEmbedding { euler });
        }
        if n >= 3 {
            for f in &faces {
                let mut s = f.clone();
                s.sort_unstable();
                if s.windows(2).any(|w| w[0] == w[1]) {
                    let names: Vec<&str> = f.iter().map(|&v| graph.label(v)).collect();
                    return Err(Error::NotBiconnected(format!(
                        "face ({}) repeats a vertex",
                        names.join(",")
                    )));
                }
            }
        }

        let mut cycle = outer_face.to_vec();
        {
            let mut s = cycle.clone();
            s.sort_unstable();
            if cycle.len() < 2 || s.windows(2).any(|w| w[0] == w[1]) || s.iter().any(|&v| v >= n) {
                return Err(Error::BoundaryNotCycle("outer face must list distinct vertices".into()));
            }
        }
        let outer = faces
            .iter()
            .position(|f| cyclic_eq(f, &cycle))
            .or_else(|| {
                let rev: Vec<usize> = cycle.iter().rev().copied().collect();
                faces.iter().position(|f| cyclic_eq(f, &rev))
            })
            .ok_or_else(|| Error::BoundaryNotCycle("outer face is not a face of the rotation system".into()))?;

        let (a, b) = boundary_edge;
        let not_on = || {
            let name = |v: usize| graph.labels().get(v).cloned().unwrap_or_else(|| v.to_string());
            Error::EdgeNotOnBoundary(name(a), name(b))
        };
        let len = cycle.len();
        let pa = cycle.iter().position(|&v| v == a).ok_or_else(not_on)?;
        if cycle[(pa + 1) % len] == b {
            cycle.rotate_left(pa);
        } else if cycle[(pa + len - 1) % len] == b {
            cycle.reverse();
            let pa = cycle.iter().position(|&v| v == a).unwrap();
            cycle.rotate_left(pa);
        } else {
            return Err(not_on());
        }

        let mut on_boundary = vec![false; n];
        for &v in &cycle {
            on_boundary[v] = true;
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            boundary: cycle,
            on_boundary,
            faces,
            face_of,
            outer,
        })
    }

    /// Builds a plane graph from consistently oriented facial walks covering
    /// every dart exactly once (the outer face included).
    pub fn from_faces<S: Into<String>>(
        labels: Vec<S>,
        faces: &[Vec<usize>],
        outer_face: &[usize],
        boundary_edge: (usize, usize),
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
        for f in faces {
            let m = f.len();
            if m < 2 || f.iter().any(|&v| v >= n) {
                return Err(Error::InvalidRotation("malformed face".into()));
            }
            for t in 0..m {
                let (prev, cur, next) = (f[(t + m - 1) % m], f[t], f[(t + 1) % m]);
                if succ[cur].insert(prev, next).is_some() {
                    return Err(Error::InvalidRotation(format!(
                        "dart {}->{} used twice",
                        labels[prev], labels[cur]
                    )));
                }
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, map) in succ.iter().enumerate() {
            let Some((&start, _)) = map.iter().next() else {
                rotation.push(Vec::new());
                continue;
            };
            let mut rot = vec![start];
            let mut cur = map[&start];
            while cur != start {
                if rot.len() > map.len() {
                    break;
                }
                rot.push(cur);
                cur = *map.get(&cur).ok_or_else(|| {
                    Error::InvalidRotation(format!("faces around `{}` do not close up", labels[v]))
                })?;
            }
            if rot.len() != map.len() {
                return Err(Error::InvalidRotation(format!(
                    "faces around `{}` form more than one cycle",
                    labels[v]
                )));
            }
            rotation.push(rot);
        }
        PlaneGraph::new(labels, rotation, outer_face, boundary_edge)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn label(&self, v: usize) -> &str {
        self.graph.label(v)
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// The boundary cycle `(v1, ..., vn)`, starting with the boundary edge.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn boundary_labels(&self) -> Vec<&str> {
        self.boundary.iter().map(|&v| self.label(v)).collect()
    }

    /// The designated edge `e = v1 v2`.
    pub fn boundary_edge(&self) -> (usize, usize) {
        (self.boundary[0], self.boundary[1])
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.on_boundary[v]
    }

    /// Facial walks, each listed by the tails of its darts.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face_index(&self) -> usize {
        self.outer
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn interior_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        let outer = self.outer;
        self.faces
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != outer)
            .map(|(_, f)| f)
    }

    /// `G - e` for the designated boundary edge.
    pub fn graph_minus_boundary_edge(&self) -> Graph {
        let (a, b) = self.boundary_edge();
        self.graph
            .without_edge(a, b)
            .expect("boundary edge belongs to the graph")
    }

    /// True iff every face other than the outer face is a triangle.
    pub fn is_near_triangulation(&self) -> bool {
        self.interior_faces().all(|f| f.len() == 3)
    }

    fn dart_face(&self, u: usize, v: usize) -> usize {
        let p = self.rotation[u]
            .iter()
            .position(|&w| w == v)
            .expect("dart of the embedding");
        self.face_of[u][p]
    }

    fn boundary_position(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.graph.vertex_count()];
        for (i, &v) in self.boundary.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    fn is_chord(&self, u: usize, v: usize) -> bool {
        let nb = self.boundary.len();
        if !self.graph.has_edge(u, v) || !self.on_boundary[u] || !self.on_boundary[v] {
            return false;
        }
        let pos = self.boundary_position();
        let d = pos[u].abs_diff(pos[v]);
        d != 1 && d != nb - 1
    }

    /// The lexicographically least edge joining two non-consecutive boundary
    /// vertices, if any.
    pub fn find_chord(&self) -> Option<(usize, usize)> {
        self.graph
            .edges()
            .iter()
            .copied()
            .find(|&(u, v)| self.is_chord(u, v))
    }

    /// Splits along a chord `e' = xy` into the two `e'`-components `(G1, G2)`.
    /// `G1` contains the boundary edge `e`; `G2` has `e'` as its boundary edge.
    pub fn split_on_chord(&self, chord: (usize, usize)) -> Result<(PlaneGraph, PlaneGraph)> {
        let (u, v) = chord;
        if u >= self.graph.vertex_count() || v >= self.graph.vertex_count() || !self.is_chord(u, v) {
            let name = |w: usize| self.graph.labels().get(w).cloned().unwrap_or_else(|| w.to_string());
            return Err(Error::NotAChord(name(u), name(v)));
        }
        let pos = self.boundary_position();
        let (i, j) = if pos[u] < pos[v] { (pos[u], pos[v]) } else { (pos[v], pos[u]) };
        let (x, y) = (self.boundary[i], self.boundary[j]);
        let nb = self.boundary.len();

        let r1 = self.region_from(x, y, (x, y));
        let r2 = self.region_from(y, x, (x, y));
        let probe = self.boundary[i + 1];
        let (side_a, side_b) = if r1.contains(&probe) { (r1, r2) } else { (r2, r1) };
        debug_assert!(side_a.iter().filter(|w| side_b.contains(w)).count() == 2);

        // Boundary cycles of the two sides, both starting at an edge of `self`
        // or at the chord.
        let path_a: Vec<usize> = self.boundary[i..=j].to_vec();
        let mut path_b: Vec<usize> = self.boundary[j..].to_vec();
        path_b.extend_from_slice(&self.boundary[..=i]);

        let (g1_vertices, g1_boundary, g2_vertices, g2_boundary);
        if i == 0 {
            g1_vertices = side_a;
            g1_boundary = path_a;
            g2_vertices = side_b;
            // x, y, v_{j+1}, ..., v_n
            let mut b = vec![x, y];
            b.extend_from_slice(&self.boundary[j + 1..nb]);
            g2_boundary = b;
        } else {
            g1_vertices = side_b;
            let mut b = self.boundary[..=i].to_vec();
            b.extend_from_slice(&self.boundary[j..]);
            g1_boundary = b;
            g2_vertices = side_a;
            // x, y, v_{j-1}, ..., v_{i+1}
            let mut b = vec![x, y];
            b.extend(self.boundary[i + 1..j].iter().rev());
            g2_boundary = b;
        }
        let g1 = self.sub_plane(&g1_vertices, &g1_boundary)?;
        let g2 = self.sub_plane(&g2_vertices, &g2_boundary)?;
        Ok((g1, g2))
    }

    /// Vertices of all interior faces reachable from the face of dart `a -> b`
    /// without crossing `barrier` or entering the outer face.
    fn region_from(&self, a: usize, b: usize, barrier: (usize, usize)) -> Vec<usize> {
        let start = self.dart_face(a, b);
        let mut seen = vec![false; self.faces.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut in_region = vec![false; self.graph.vertex_count()];
        let is_barrier = |p: usize, q: usize| (p, q) == barrier || (q, p) == barrier;
        while let Some(f) = queue.pop_front() {
            let face = &self.faces[f];
            let m = face.len();
            for t in 0..m {
                let (p, q) = (face[t], face[(t + 1) % m]);
                in_region[p] = true;
                if is_barrier(p, q) {
                    continue;
                }
                let g = self.dart_face(q, p);
                if g != self.outer && !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        (0..in_region.len()).filter(|&v| in_region[v]).collect()
    }

    /// Induced plane subgraph on `keep` with the given boundary cycle (old
    /// indices, starting with the new boundary edge).
    fn sub_plane(&self, keep: &[usize], boundary: &[usize]) -> Result<PlaneGraph> {
        let (sub, old_of) = self.graph.induced(keep);
        let mut new_of = vec![usize::MAX; self.graph.vertex_count()];
        for (i, &v) in old_of.iter().enumerate() {
            new_of[v] = i;
        }
        let rotation: Vec<Vec<usize>> = old_of
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| new_of[w] != usize::MAX)
                    .map(|&w| new_of[w])
                    .collect()
            })
            .collect();
        let cycle: Vec<usize> = boundary.iter().map(|&v| new_of[v]).collect();
        PlaneGraph::new(sub.labels().to_vec(), rotation, &cycle, (cycle[0], cycle[1]))
    }

    /// Deletes `v_n`, the boundary vertex preceding `v1`. Requires a chordless
    /// near-triangulation with at least three boundary vertices.
    ///
    /// The remaining graph has boundary `(v1, v2, ..., v_{n-1}, u_k, ..., u_1)`
    /// and keeps `e = v1 v2` as its boundary edge.
    pub fn delete_boundary_vertex(&self) -> Result<(PlaneGraph, NeighborFan)> {
        let nb = self.boundary.len();
        if nb < 3 {
            return Err(Error::PreconditionViolated(
                "boundary vertex deletion needs a boundary of length at least 3".into(),
            ));
        }
        if !self.is_near_triangulation() {
            return Err(Error::NotNearTriangulation(format!(
                "an interior face of `{}` is not a triangle",
                self.graph.labels().join(",")
            )));
        }
        if let Some((a, b)) = self.find_chord() {
            return Err(Error::HasChord(self.label(a).into(), self.label(b).into()));
        }
        let v1 = self.boundary[0];
        let vn = self.boundary[nb - 1];
        let v_prev = self.boundary[nb - 2];
        let rot = &self.rotation[vn];
        let d = rot.len();
        let p1 = rot.iter().position(|&w| w == v1).expect("v1 adjacent to vn");
        let forward = d <= 2 || rot[(p1 + 1) % d] != v_prev;
        let mut fan = Vec::new();
        let mut p = p1;
        loop {
            p = if forward { (p + 1) % d } else { (p + d - 1) % d };
            let w = rot[p];
            if w == v_prev {
                break;
            }
            if self.on_boundary[w] {
                return Err(Error::PreconditionViolated(format!(
                    "neighbor `{}` of the deleted vertex lies on the boundary",
                    self.label(w)
                )));
            }
            fan.push(w);
        }

        let keep: Vec<usize> = (0..self.graph.vertex_count()).filter(|&v| v != vn).collect();
        let mut boundary: Vec<usize> = self.boundary[..nb - 1].to_vec();
        boundary.extend(fan.iter().rev());
        let sub = self.sub_plane(&keep, &boundary)?;
        let to_new = |v: usize| if v > vn { v - 1 } else { v };
        let neighbor_fan = NeighborFan {
            removed: self.label(vn).to_string(),
            v1: to_new(v1),
            interior: fan.iter().map(|&w| to_new(w)).collect(),
            v_prev: to_new(v_prev),
        };
        Ok((sub, neighbor_fan))
    }

    /// Adds diagonals inside interior faces until every interior face is a
    /// triangle. Each step takes the first non-triangular interior face, its
    /// least vertex as apex, and the first non-adjacent vertex at distance at
    /// least two along the face; faces whose least vertex has no admissible
    /// diagonal fall back to the next apex. Returns the added edges in
    /// insertion order.
    pub fn triangulate_interior(&self) -> Result<(PlaneGraph, Vec<(usize, usize)>)> {
        let mut pg = self.clone();
        let mut added = Vec::new();
        while let Some(f) = pg
            .faces
            .iter()
            .enumerate()
            .position(|(i, f)| i != pg.outer && f.len() > 3)
        {
            let face = pg.faces[f].clone();
            let m = face.len();
            let mut apexes: Vec<usize> = (0..m).collect();
            apexes.sort_by_key(|&t| face[t]);
            let choice = apexes.iter().find_map(|&t| {
                (2..=m - 2)
                    .map(|s| (t, (t + s) % m))
                    .find(|&(_, tb)| !pg.graph.has_edge(face[t], face[tb]))
            });
            let Some((ta, tb)) = choice else {
                let names: Vec<&str> = face.iter().map(|&v| pg.label(v)).collect();
                return Err(Error::CannotTriangulate(names.join(",")));
            };
            let (a, b) = (face[ta], face[tb]);
            let mut rotation = pg.rotation.clone();
            for (t, other) in [(ta, b), (tb, a)] {
                let v = face[t];
                let prev = face[(t + m - 1) % m];
                let p = rotation[v].iter().position(|&w| w == prev).unwrap();
                rotation[v].insert(p + 1, other);
            }
            let boundary = pg.boundary.clone();
            pg = PlaneGraph::new(
                pg.graph.labels().to_vec(),
                rotation,
                &boundary,
                (boundary[0], boundary[1]),
            )?;
            added.push((a.min(b), a.max(b)));
        }
        Ok((pg, added))
    }
}

fn trace_faces(rotation: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut face_of: Vec<Vec<usize>> = rotation.iter().map(|r| vec![usize::MAX; r.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..rotation.len() {
        for p in 0..rotation[v].len() {
            if face_of[v][p] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut a, mut pa) = (v, p);
            while face_of[a][pa] == usize::MAX {
                face_of[a][pa] = id;
                walk.push(a);
                let b = rotation[a][pa];
                let rb = &rotation[b];
                let back = rb.iter().position(|&w| w == a).expect("symmetric rotation");
                let pb = (back + 1) % rb.len();
                a = b;
                pa = pb;
            }
            faces.push(walk);
        }
    }
    (faces, face_of)
}

/// Label-level constructor: `rotations` maps each vertex to its cyclic list of
/// neighbors. Vertex order is the order of `vertices`.
pub fn build_plane_graph<S: AsRef<str>>(
    vertices: &[S],
    rotations: &[(S, Vec<S>)],
    outer_face: &[S],
    boundary_edge: (S, S),
) -> Result<PlaneGraph> {
    let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
    let lookup = |s: &S| {
        labels
            .iter()
            .position(|l| l == s.as_ref())
            .ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()))
    };
    let mut rotation = vec![None; labels.len()];
    for (v, rot) in rotations {
        let i = lookup(v)?;
        let list = rot.iter().map(lookup).collect::<Result<Vec<_>>>()?;
        if rotation[i].replace(list).is_some() {
            return Err(Error::InvalidRotation(format!("two rotations for `{}`", v.as_ref())));
        }
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| Error::InvalidRotation(format!("no rotation for `{}`", labels[i]))))
        .collect::<Result<Vec<_>>>()?;
    let outer = outer_face.iter().map(lookup).collect::<Result<Vec<_>>>()?;
    let e = (lookup(&boundary_edge.0)?, lookup(&boundary_edge.1)?);
    PlaneGraph::new(labels, rotation, &outer, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn triangle() -> PlaneGraph {
        build_plane_graph(
            &["v1", "v2", "v3"],
            &[("v1", vec!["v2", "v3"]), ("v2", vec!["v3", "v1"]), ("v3", vec!["v1", "v2"])],
            &["v1", "v2", "v3"],
            ("v1", "v2"),
        )
        .unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let t = triangle();
        assert_eq!(t.face_count(), 2);
        assert_eq!(t.boundary_labels(), ["v1", "v2", "v3"]);
        assert!(t.is_near_triangulation());
    }

    #[test]
    fn boundary_direction_follows_boundary_edge() {
        let t = build_plane_graph(
            &["v1", "v2", "v3"],
            &[("v1", vec!["v2", "v3"]), ("v2", vec!["v3", "v1"]), ("v3", vec!["v1", "v2"])],
            &["v3", "v2", "v1"],
            ("v1", "v2"),
        )
        .unwrap();
        assert_eq!(t.boundary_labels(), ["v1", "v2", "v3"]);
    }

    #[test]
    fn k2_is_a_degenerate_plane_graph() {
        let k2 = PlaneGraph::new(vec!["a", "b"], vec![vec![1], vec![0]], &[0, 1], (0, 1)).unwrap();
        assert_eq!(k2.face_count(), 1);
        assert_eq!(k2.boundary(), &[0, 1]);
        assert!(k2.find_chord().is_none());
    }

    #[test]
    fn edge_off_boundary_rejected() {
        let k4 = generate::embedded_k4();
        let hub = k4.graph().require("u").unwrap();
        let v1 = k4.graph().require("v1").unwrap();
        let err = PlaneGraph::new(
            k4.graph().labels().to_vec(),
            k4.rotations().to_vec(),
            k4.boundary(),
            (v1, hub),
        )
        .unwrap_err();
        assert!(matches!(err, Error::EdgeNotOnBoundary(..)));
    }

    #[test]
    fn non_facial_outer_cycle_rejected() {
        // 0-1-2-h is a cycle of the wheel but not a face.
        let w = generate::wheel(4);
        let hub = w.graph().require("h").unwrap();
        let rim: Vec<usize> = vec![0, 1, 2, hub];
        let err = PlaneGraph::new(w.graph().labels().to_vec(), w.rotations().to_vec(), &rim, (0, 1))
            .unwrap_err();
        assert!(matches!(err, Error::BoundaryNotCycle(_)));
    }

    #[test]
    fn cut_vertex_rejected() {
        // Two triangles sharing vertex 0 (a bowtie); the outer walk repeats 0.
        let faces = vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 2, 1, 0, 4, 3]];
        let err = PlaneGraph::from_faces(vec!["0", "1", "2", "3", "4"], &faces, &[0, 1, 2], (0, 1));
        assert!(matches!(err, Err(Error::InvalidRotation(_)) | Err(Error::NotBiconnected(_))));
    }

    #[test]
    fn triangulating_c5_adds_two_diagonals_from_least_vertex() {
        let c5 = generate::cycle_plane(5);
        let (t, mut added) = c5.triangulate_interior().unwrap();
        added.sort_unstable();
        assert_eq!(added, vec![(0, 2), (0, 3)]);
        assert!(t.is_near_triangulation());
        assert_eq!(t.boundary(), c5.boundary());
    }

    #[test]
    fn triangulation_skips_existing_edges() {
        // Square 0123 with the outer edge 0-2 drawn outside: the interior
        // diagonal must be 1-3.
        let faces = vec![vec![0, 1, 2, 3], vec![0, 3, 2], vec![0, 2, 1]];
        let pg = PlaneGraph::from_faces(vec!["0", "1", "2", "3"], &faces, &[0, 3, 2], (0, 3)).unwrap();
        let (t, added) = pg.triangulate_interior().unwrap();
        assert_eq!(added, vec![(1, 3)]);
        assert!(t.is_near_triangulation());
    }
}
