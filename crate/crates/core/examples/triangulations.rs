//! Enumerates sphere triangulations, punctures them and checks the
//! resulting near-triangulations.

use alon_tarsi::graph::generate;

fn main() -> alon_tarsi::Result<()> {
    for n in 4..=9 {
        let all = generate::triangulations(n);
        let max_degree: Vec<usize> = all
            .iter()
            .map(|t| {
                let pg = generate::triangulation_plane(n, t, 0);
                (0..n).map(|v| pg.graph().degree(v)).max().unwrap()
            })
            .collect();
        println!("n = {n}: {} triangulations, max degrees {max_degree:?}", all.len());
    }

    let pg = generate::punctured_triangulation(12, &generate::icosahedron_triangles(), 0);
    println!(
        "icosahedron minus a vertex: {} vertices, {} edges, boundary {:?}, near-triangulation {}",
        pg.graph().vertex_count(),
        pg.graph().edge_count(),
        pg.boundary_labels(),
        pg.is_near_triangulation()
    );
    let c6 = generate::cycle_plane(6);
    let (tri, added) = c6.triangulate_interior()?;
    println!("C6 triangulated with {added:?}; chord {:?}", tri.find_chord());
    Ok(())
}
