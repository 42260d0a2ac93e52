use alon_tarsi::graph::io::GraphDocument;
use alon_tarsi::graph::{generate, PlaneGraph};
use alon_tarsi::{Error, Graph};

fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/graphs").join(name)
}

#[test]
fn graph_construction_errors() {
    assert!(matches!(Graph::numbered(2, &[(0, 0)]), Err(Error::InvalidGraph(_))));
    assert!(matches!(Graph::numbered(2, &[(0, 1), (1, 0)]), Err(Error::InvalidGraph(_))));
    assert!(matches!(Graph::numbered(2, &[(0, 2)]), Err(Error::InvalidGraph(_))));
    assert!(matches!(Graph::from_labeled(&["a"], &[("a", "b")]), Err(Error::UnknownVertex(_))));
    assert!(matches!(Graph::new(vec!["a", "a"], &[]), Err(Error::InvalidGraph(_))));
}

#[test]
fn embedding_errors() {
    let k5: Vec<Vec<usize>> = (0..5).map(|v| (0..5).filter(|&w| w != v).collect()).collect();
    let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
    assert!(matches!(
        PlaneGraph::new(labels, k5, &[0, 1, 2], (0, 1)),
        Err(Error::NonPlanarEmbedding { .. })
    ));
    let c4 = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]];
    assert!(matches!(
        PlaneGraph::new(vec!["a", "b", "c", "d"], c4.clone(), &[0, 1, 2, 3], (0, 2)),
        Err(Error::EdgeNotOnBoundary(..))
    ));
    assert!(matches!(
        PlaneGraph::new(vec!["a", "b", "c", "d"], c4, &[0, 1, 3, 2], (0, 1)),
        Err(Error::BoundaryNotCycle(_))
    ));
    let one_sided = vec![vec![1], vec![]];
    assert!(matches!(
        PlaneGraph::new(vec!["a", "b"], one_sided, &[0, 1], (0, 1)),
        Err(Error::InvalidRotation(_))
    ));
    // A path has a face that repeats its middle vertex.
    let path = vec![vec![1], vec![0, 2], vec![1]];
    assert!(matches!(
        PlaneGraph::new(vec!["a", "b", "c"], path, &[0, 1, 2], (0, 1)),
        Err(Error::NotBiconnected(_)) | Err(Error::BoundaryNotCycle(_))
    ));
}

#[test]
fn documents_roundtrip() {
    for (name, pg) in generate::corpus() {
        let doc = GraphDocument::from_plane_graph(Some(&name), &pg);
        let back = GraphDocument::parse(&doc.to_json()).unwrap().to_plane_graph().unwrap();
        assert_eq!(back.graph().edges(), pg.graph().edges(), "{name}");
        assert_eq!(back.graph().labels(), pg.graph().labels());
        assert_eq!(back.boundary(), pg.boundary());
    }
    for file in ["triangle", "k4", "c4", "c5", "wheel5", "octahedron", "icosahedron"] {
        let pg = GraphDocument::read(&data(&format!("{file}.graph"))).unwrap().to_plane_graph().unwrap();
        assert!(pg.graph().is_connected());
    }
    for file in ["k5", "c7", "k2"] {
        let doc = GraphDocument::read(&data(&format!("{file}.graph"))).unwrap();
        assert!(doc.to_graph().is_ok());
    }
    assert!(matches!(GraphDocument::parse("{"), Err(Error::Parse(_))));
}

#[test]
fn euler_formula_and_faces() {
    for (name, pg) in generate::corpus() {
        let g = pg.graph();
        assert_eq!(g.vertex_count() + pg.face_count(), g.edge_count() + 2, "{name}");
        let darts: usize = pg.faces().iter().map(Vec::len).sum();
        assert_eq!(darts, 2 * g.edge_count());
        assert_eq!(pg.faces()[pg.outer_face_index()].len(), pg.boundary().len());
    }
}

#[test]
fn triangulation_invariants() {
    for (name, pg) in generate::corpus() {
        let (tri, added) = pg.triangulate_interior().unwrap();
        assert!(tri.is_near_triangulation(), "{name}");
        assert_eq!(tri.boundary(), pg.boundary());
        assert_eq!(tri.graph().edge_count(), pg.graph().edge_count() + added.len());
        for &(u, v) in &added {
            assert!(!pg.graph().has_edge(u, v) && tri.graph().has_edge(u, v));
        }
        // Interior faces are triangles: 3F_int + |B| = 2m.
        let interior = tri.face_count() - 1;
        assert_eq!(3 * interior + tri.boundary().len(), 2 * tri.graph().edge_count());
    }
}

#[test]
fn chord_split_invariants() {
    let mut splits = 0;
    for (name, pg) in generate::corpus() {
        let (tri, _) = pg.triangulate_interior().unwrap();
        let Some(chord) = tri.find_chord() else { continue };
        let (a, b) = tri.split_on_chord(chord).unwrap();
        let (g, ga, gb) = (tri.graph(), a.graph(), b.graph());
        assert_eq!(ga.vertex_count() + gb.vertex_count(), g.vertex_count() + 2, "{name}");
        assert_eq!(ga.edge_count() + gb.edge_count(), g.edge_count() + 1);
        assert_eq!(a.boundary().len() + b.boundary().len(), tri.boundary().len() + 2);
        assert!(a.is_near_triangulation() && b.is_near_triangulation());
        let e = tri.boundary_edge();
        let (l1, l2) = (tri.label(e.0), tri.label(e.1));
        assert_eq!((a.label(a.boundary_edge().0), a.label(a.boundary_edge().1)), (l1, l2));
        splits += 1;
    }
    assert!(splits > 5);
}

#[test]
fn deleting_a_boundary_vertex() {
    let mut seen = 0;
    for (name, pg) in generate::corpus() {
        let (tri, _) = pg.triangulate_interior().unwrap();
        if tri.boundary().len() < 4 || tri.find_chord().is_some() {
            continue;
        }
        let vn = *tri.boundary().last().unwrap();
        let (sub, fan) = tri.delete_boundary_vertex().unwrap();
        assert_eq!(fan.removed, tri.label(vn));
        assert_eq!(sub.graph().vertex_count() + 1, tri.graph().vertex_count(), "{name}");
        assert_eq!(sub.graph().edge_count() + tri.graph().degree(vn), tri.graph().edge_count());
        assert_eq!(sub.boundary().len(), tri.boundary().len() - 1 + fan.interior.len());
        assert_eq!(sub.boundary_edge().0, fan.v1);
        assert!(sub.is_near_triangulation());
        for &u in &fan.interior {
            assert!(!tri.is_boundary(tri.graph().index_of(sub.label(u)).unwrap()));
        }
        seen += 1;
    }
    assert!(seen > 5);
}

#[test]
fn triangulation_counts() {
    let counts: Vec<usize> = (4..=8).map(|n| generate::triangulations(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14]);
    let sizes: Vec<usize> = (1..=5).map(|n| generate::connected_graphs(n).len()).collect();
    assert_eq!(sizes, [1, 1, 2, 6, 21]);
}
