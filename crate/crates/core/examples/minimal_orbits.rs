//! Minimal orbits of each stratum, compared with the sources of the graph.

use grass_orbits::poset::{binomial, build_graph, minimal_orbits};

fn main() {
    let (n, k, l) = (6, 3, 2);
    let g = build_graph(n, k, l).unwrap();
    for d in g.strata_range() {
        let mins = minimal_orbits(n, k, l, d).unwrap();
        println!("d = {d}: {} minimal orbits (binomial {}), dim {}", mins.len(), binomial(k + l - 2 * d, k - d), (k - d) * (l - d));
        for m in &mins {
            let id = g.id_of(m).unwrap();
            println!("  {m}  incoming edges: {}", g.incoming(id).count());
        }
    }
    let sources = g.sources().len();
    println!("graph sources: {sources}");
}
