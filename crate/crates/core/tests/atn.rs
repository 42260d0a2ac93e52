mod common;

use alon_tarsi::algebra::{graph_coefficient, IndexFunction};
use alon_tarsi::atn::*;
use alon_tarsi::graph::generate;
use alon_tarsi::planar_cert::certify_at5;
use alon_tarsi::Graph;
use num_bigint::BigInt;
use num_traits::Zero;

#[test]
fn cycles_and_complete_graphs() {
    for n in 3..=8 {
        let r = alon_tarsi_number(&generate::cycle(n), 6).unwrap();
        assert_eq!(r.at_number, if n % 2 == 0 { 2 } else { 3 }, "C{n}");
    }
    for n in 1..=5 {
        assert_eq!(alon_tarsi_number(&generate::complete(n), 6).unwrap().at_number, n, "K{n}");
    }
    let c4 = alon_tarsi_number(&generate::cycle(4), 6).unwrap();
    assert_eq!(c4.witness, IndexFunction::new(vec![1, 1, 1, 1]));
}

#[test]
fn matches_definition_and_bounds_chromatic_number() {
    for n in 1..=5 {
        for g in generate::connected_graphs(n) {
            let r = alon_tarsi_number(&g, 6).unwrap();
            assert_eq!(r.at_number, common::brute_at(&g), "{:?}", g.edges());
            assert!(r.at_number >= common::brute_chromatic(&g));
            assert!(r.witness.max_value() < r.at_number as u32);
            assert_eq!(r.witness.total(), g.edge_count() as u64);
            assert_eq!(graph_coefficient(&g, &r.witness).unwrap(), r.coefficient);
            assert!(!r.coefficient.is_zero());
        }
    }
}

#[test]
fn witness_is_lexicographically_least() {
    for g in generate::connected_graphs(4) {
        let r = alon_tarsi_number(&g, 6).unwrap();
        let n = g.vertex_count();
        let k = r.at_number as u32;
        let mut eta = vec![0u32; n];
        loop {
            let f = IndexFunction::new(eta.clone());
            if f.total() == g.edge_count() as u64 && !graph_coefficient(&g, &f).unwrap().is_zero() {
                assert_eq!(f, r.witness);
                break;
            }
            // Advance in lexicographic order (last coordinate fastest).
            let mut i = n;
            loop {
                i -= 1;
                if eta[i] + 1 < k {
                    eta[i] += 1;
                    break;
                }
                eta[i] = 0;
            }
        }
    }
}

#[test]
fn monotone_under_edge_deletion() {
    for n in 2..=6 {
        for g in generate::connected_graphs(n).into_iter().filter(|g| g.edge_count() <= 11) {
            let at = alon_tarsi_number(&g, 7).unwrap().at_number;
            for &(u, v) in g.edges() {
                let h = g.without_edge(u, v).unwrap();
                assert!(alon_tarsi_number(&h, 7).unwrap().at_number <= at);
            }
        }
    }
}

#[test]
fn restriction_keeps_a_nonzero_coefficient() {
    for n in 3..=5 {
        for g in generate::connected_graphs(n) {
            let r = alon_tarsi_number(&g, 6).unwrap();
            for &(u, v) in g.edges() {
                let (eta, c) = restrict_index(&g, &r.witness, (u, v)).unwrap();
                assert!(eta.dominated_by(&r.witness));
                let h = g.without_edge(u, v).unwrap();
                assert_eq!(graph_coefficient(&h, &eta).unwrap(), c);
                assert!(!c.is_zero());
                // Lexicographic preference: eta - 1_u wins whenever it works.
                if eta == r.witness.checked_sub(&IndexFunction::unit(v)).unwrap_or_default() {
                    if let Some(first) = r.witness.checked_sub(&IndexFunction::unit(u)) {
                        assert!(graph_coefficient(&h, &first).unwrap().is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn restriction_examples() {
    let k2 = Graph::from_labeled(&["a", "b"], &[("a", "b")]).unwrap();
    let (eta, c) = restrict_index(&k2, &IndexFunction::new(vec![0, 1]), (0, 1)).unwrap();
    assert_eq!((eta, c), (IndexFunction::zero(), BigInt::from(1)));
    let c4 = generate::cycle(4);
    let (eta, c) = restrict_index(&c4, &IndexFunction::new(vec![1, 1, 1, 1]), (0, 1)).unwrap();
    assert_eq!(eta.total(), 3);
    assert_eq!(BigInt::from(common::brute_coefficient(&c4.without_edge(0, 1).unwrap(), &eta.to_dense(4))), c);
}

#[test]
fn stripping_triangulated_cycles() {
    for n in 4..=5 {
        let pg = generate::cycle_plane(n);
        let (tri, added) = pg.triangulate_interior().unwrap();
        assert_eq!(added.len(), n - 3);
        let cert = certify_at5(&tri).unwrap();
        let eta = IndexFunction::new(cert.out_degrees().iter().map(|&d| d as u32).collect());
        let (stripped, c) = strip_added_edges(tri.graph(), &eta, &added).unwrap();
        assert!(stripped.dominated_by(&eta) && stripped.max_value() <= 4);
        assert_eq!(BigInt::from(common::brute_coefficient(pg.graph(), &stripped.to_dense(n))), c);
        assert!(!c.is_zero());
    }
}
