//! Alon-Tarsi numbers of cycles, complete graphs and K_{2,3}.

use alon_tarsi::graph::generate;
use alon_tarsi::{alon_tarsi_number, orientation_from_index, Graph};

fn main() -> alon_tarsi::Result<()> {
    let k23 = Graph::numbered(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])?;
    let mut graphs = vec![("K2,3".to_string(), k23)];
    graphs.extend((3..=7).map(|n| (format!("C{n}"), generate::cycle(n))));
    graphs.extend((2..=5).map(|n| (format!("K{n}"), generate::complete(n))));

    for (name, g) in graphs {
        let r = alon_tarsi_number(&g, 6)?;
        let d = orientation_from_index(&g, &r.witness).expect("witness is an out-degree sequence");
        println!(
            "{name:5} AT = {}  witness {:?}  coefficient {}  arcs {:?}",
            r.at_number,
            r.witness.to_dense(g.vertex_count()),
            r.coefficient,
            d.arcs()
        );
    }
    Ok(())
}
