//! Labeled simple graphs.
//!
//! Vertex indices double as the fixed vertex order `<` that determines the
//! sign convention of the graph polynomial: vertex `i` precedes vertex `j`
//! iff `i < j`. Labels are opaque strings.

use std::collections::{HashMap, VecDeque};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub mod generate;
pub mod io;
pub mod plane;

pub use plane::{NeighborFan, PlaneGraph};

/// A simple undirected graph with labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Sorted, each pair `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from labels (in vertex order) and index pairs.
    pub fn new<S: Into<String>>(labels: Vec<S>, edges: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{l}`")));
            }
        }
        let n = labels.len();
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at `{}`", labels[a])));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0];
            return Err(Error::InvalidGraph(format!(
                "parallel edge {}-{}",
                labels[a], labels[b]
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &norm {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            labels,
            index,
            edges: norm,
            adj,
        })
    }

    /// Builds a graph from label pairs. Vertex order is the order of `vertices`.
    pub fn from_labeled(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let lookup = |v: &str| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(vertices.to_vec(), &pairs)
    }

    /// Graph on `n` vertices labeled `"0"`, `"1"`, ...
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let key = (u.min(v), u.max(v));
        if self.edge_index(u, v).is_none() {
            return Err(Error::InvalidGraph(format!(
                "no edge {}-{}",
                self.labels[u], self.labels[v]
            )));
        }
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        Graph::new(self.labels.clone(), &edges)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.labels.clone(), &edges)
    }

    /// Induced subgraph on `keep`; the relative vertex order is preserved.
    /// Returns the subgraph and, for each new index, the old index.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_of[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_of[a] != usize::MAX && new_of[b] != usize::MAX)
            .map(|&(a, b)| (new_of[a], new_of[b]))
            .collect();
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let g = Graph::new(labels, &edges).expect("induced subgraph of a simple graph is simple");
        (g, keep)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Breadth-first vertex order covering every component, starting from the
    /// least vertex of each. Used to keep dynamic-programming frontiers small.
    pub fn bfs_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }

    /// Edge indices ordered so that each vertex's incident edges finish as
    /// early as possible: edges are grouped by the later endpoint in
    /// [`Graph::bfs_order`].
    pub fn elimination_edge_order(&self) -> Vec<usize> {
        let order = self.bfs_order();
        let mut rank = vec![0; self.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut idx: Vec<usize> = (0..self.edges.len()).collect();
        idx.sort_by_key(|&i| {
            let (a, b) = self.edges[i];
            let (ra, rb) = (rank[a], rank[b]);
            (ra.max(rb), ra.min(rb))
        });
        idx
    }

    /// SHA-256 over a canonical rendering of labels (in order) and edges.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        for l in &self.labels {
            h.update(b"v\t");
            h.update(l.as_bytes());
            h.update(b"\n");
        }
        for &(a, b) in &self.edges {
            h.update(b"e\t");
            h.update(self.labels[a].as_bytes());
            h.update(b"\t");
            h.update(self.labels[b].as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }
}
