//! Colors the octahedron from random lists sized by a certificate's
//! out-degrees (d+(v) + 1 colors each).

use alon_tarsi::coloring::{find_list_coloring, is_proper, random_lists};
use alon_tarsi::graph::generate;
use alon_tarsi::planar_cert::certify_at5;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> alon_tarsi::Result<()> {
    let pg = generate::octahedron();
    let g = pg.graph();
    let cert = certify_at5(&pg)?;
    let sizes: Vec<usize> = cert.out_degrees().iter().map(|d| d + 1).collect();
    println!("list sizes {sizes:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..3 {
        let lists = random_lists(&sizes, 5, &mut rng);
        let coloring = find_list_coloring(g, &lists)?;
        assert!(is_proper(g, &lists, &coloring));
        println!("lists {:?}\n  -> {:?}", lists.lists(), coloring.colors);
    }
    Ok(())
}
