//! Counts even and odd Eulerian sub-digraphs of an orientation and compares
//! the signed difference with the matching polynomial coefficient.

use alon_tarsi::eulerian::{eulerian_counts, eulerian_subgraphs, signed_diff, Orientation};
use alon_tarsi::graph::generate;
use alon_tarsi::graph_coefficient;

fn main() -> alon_tarsi::Result<()> {
    let k4 = generate::complete(4);
    // A directed triangle 0 -> 1 -> 2 -> 0 with 3 pointing into it.
    let d = Orientation::from_arcs(k4.clone(), &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)])?;

    let counts = eulerian_counts(&d)?;
    println!("|EE| = {}, |OE| = {}", counts.even, counts.odd);
    for set in eulerian_subgraphs(&d, 30)? {
        let arcs: Vec<_> = (0..d.arc_count()).filter(|i| set >> i & 1 == 1).map(|i| d.arc(i)).collect();
        println!("  {arcs:?}");
    }

    let eta = d.index_function();
    println!("out-degrees {:?}", eta.to_dense(4));
    println!("signed difference {}", signed_diff(&d)?);
    println!("coefficient       {}", graph_coefficient(&k4, &eta)?);
    Ok(())
}
