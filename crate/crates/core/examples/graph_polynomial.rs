//! Expands the graph polynomial of C4 and reads off a few coefficients.

use alon_tarsi::algebra::{graph_coefficient, graph_polynomial, IndexFunction};
use alon_tarsi::graph::generate;

fn main() -> alon_tarsi::Result<()> {
    let c4 = generate::cycle(4);
    let p = graph_polynomial(&c4)?;
    println!("P_C4 = {p}");
    println!("{} terms, homogeneous of degree {}", p.len(), c4.edge_count());

    for eta in [[1, 1, 1, 1], [2, 0, 2, 0], [3, 1, 0, 0]] {
        let eta = IndexFunction::new(eta.to_vec());
        println!("coefficient of x^{:?}: {}", eta.to_dense(4), graph_coefficient(&c4, &eta)?);
    }
    Ok(())
}
