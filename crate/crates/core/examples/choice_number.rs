//! Exhaustive choice numbers next to Alon-Tarsi numbers, with a bad list
//! assignment for each graph.

use alon_tarsi::coloring::choice_number;
use alon_tarsi::graph::generate;
use alon_tarsi::{alon_tarsi_number, Graph};

fn main() -> alon_tarsi::Result<()> {
    let k23 = Graph::numbered(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])?;
    let k33 = Graph::numbered(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])?;
    let graphs = [
        ("C4", generate::cycle(4)),
        ("C5", generate::cycle(5)),
        ("K4", generate::complete(4)),
        ("K2,3", k23),
        ("K3,3", k33),
    ];
    for (name, g) in graphs {
        let ch = choice_number(&g, 6)?;
        let at = alon_tarsi_number(&g, 6)?.at_number;
        println!("{name:5} ch = {}  AT = {at}", ch.choice_number);
        if let Some(bad) = ch.counterexample {
            println!("      no coloring from {:?}", bad.lists());
        }
    }
    Ok(())
}
