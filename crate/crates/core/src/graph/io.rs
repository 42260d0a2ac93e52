//! JSON graph documents.
//!
//! ```json
//! {
//!   "name": "k4",
//!   "vertices": ["v1", "v2", "v3", "u"],
//!   "rotations": {"v1": ["v2", "u", "v3"], "...": []},
//!   "outer_face": ["v1", "v2", "v3"],
//!   "boundary_edge": ["v1", "v2"]
//! }
//! ```
//!
//! A document carrying `edges` and no `rotations` describes an abstract graph;
//! it is accepted wherever no embedding is needed. `vertex_order`, when
//! present, overrides the order of `vertices`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::plane::build_plane_graph;
use crate::graph::{Graph, PlaneGraph};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_order: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotations: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_edge: Option<[String; 2]>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn name_or(&self, fallback: &str) -> String {
        self.name.clone().unwrap_or_else(|| fallback.to_string())
    }

    fn ordered_vertices(&self) -> Result<Vec<String>> {
        let Some(order) = &self.vertex_order else {
            return Ok(self.vertices.clone());
        };
        let mut a = order.clone();
        let mut b = self.vertices.clone();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::InvalidGraph(
                "vertex_order is not a permutation of vertices".into(),
            ));
        }
        Ok(order.clone())
    }

    fn rotation_edges(&self) -> Option<Vec<(String, String)>> {
        let rot = self.rotations.as_ref()?;
        let mut edges = Vec::new();
        for (v, list) in rot {
            for w in list {
                if v < w {
                    edges.push((v.clone(), w.clone()));
                }
            }
        }
        Some(edges)
    }

    /// The abstract graph, from `edges` or else from `rotations`.
    pub fn to_graph(&self) -> Result<Graph> {
        let vertices = self.ordered_vertices()?;
        let pairs: Vec<(String, String)> = match (&self.edges, self.rotation_edges()) {
            (Some(edges), _) => edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect(),
            (None, Some(edges)) => edges,
            (None, None) => Vec::new(),
        };
        let names: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let g = Graph::from_labeled(&names, &refs)?;
        if let (Some(_), Some(rot_edges)) = (&self.edges, self.rotation_edges()) {
            let refs: Vec<(&str, &str)> = rot_edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let h = Graph::from_labeled(&names, &refs)?;
            if h.edges() != g.edges() {
                return Err(Error::InvalidGraph("edges disagree with rotations".into()));
            }
        }
        Ok(g)
    }

    pub fn to_plane_graph(&self) -> Result<PlaneGraph> {
        let missing = |what: &str| Error::Parse(format!("embedding requires `{what}`"));
        let rot = self.rotations.as_ref().ok_or_else(|| missing("rotations"))?;
        let outer = self.outer_face.as_ref().ok_or_else(|| missing("outer_face"))?;
        let [a, b] = self.boundary_edge.clone().ok_or_else(|| missing("boundary_edge"))?;
        let vertices = self.ordered_vertices()?;
        let rotations: Vec<(String, Vec<String>)> =
            rot.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let pg = build_plane_graph(&vertices, &rotations, outer, (a, b))?;
        if self.edges.is_some() {
            let g = self.to_graph()?;
            if g.edges() != pg.graph().edges() {
                return Err(Error::InvalidGraph("edges disagree with rotations".into()));
            }
        }
        Ok(pg)
    }

    pub fn from_graph(name: Option<&str>, g: &Graph) -> Self {
        GraphDocument {
            name: name.map(str::to_string),
            vertices: g.labels().to_vec(),
            edges: Some(
                g.edges()
                    .iter()
                    .map(|&(a, b)| [g.label(a).to_string(), g.label(b).to_string()])
                    .collect(),
            ),
            ..Default::default()
        }
    }

    pub fn from_plane_graph(name: Option<&str>, pg: &PlaneGraph) -> Self {
        let g = pg.graph();
        let rotations = (0..g.vertex_count())
            .map(|v| {
                (
                    g.label(v).to_string(),
                    pg.rotation(v).iter().map(|&w| g.label(w).to_string()).collect(),
                )
            })
            .collect();
        let (a, b) = pg.boundary_edge();
        GraphDocument {
            name: name.map(str::to_string),
            vertices: g.labels().to_vec(),
            rotations: Some(rotations),
            outer_face: Some(pg.boundary_labels().iter().map(|s| s.to_string()).collect()),
            boundary_edge: Some([g.label(a).to_string(), g.label(b).to_string()]),
            ..Default::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph documents serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn plane_document_round_trips() {
        let k4 = generate::embedded_k4();
        let doc = GraphDocument::from_plane_graph(Some("k4"), &k4);
        let back = GraphDocument::parse(&doc.to_json()).unwrap().to_plane_graph().unwrap();
        assert_eq!(back.graph(), k4.graph());
        assert_eq!(back.boundary(), k4.boundary());
        assert_eq!(back.face_count(), 4);
    }

    #[test]
    fn edges_only_document() {
        let doc = GraphDocument::parse(r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#).unwrap();
        let g = doc.to_graph().unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(doc.to_plane_graph(), Err(Error::Parse(_))));
    }

    #[test]
    fn vertex_order_override() {
        let doc = GraphDocument::parse(
            r#"{"vertices":["a","b"],"vertex_order":["b","a"],"edges":[["a","b"]]}"#,
        )
        .unwrap();
        let g = doc.to_graph().unwrap();
        assert_eq!(g.labels(), ["b", "a"]);
        let bad = GraphDocument::parse(r#"{"vertices":["a","b"],"vertex_order":["a"]}"#).unwrap();
        assert!(bad.to_graph().is_err());
    }
}
