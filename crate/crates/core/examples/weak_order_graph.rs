//! Builds the weak-order graph and summarizes each stratum.
//!
//! `cargo run --example weak_order_graph -- 5 2 2 [--dot]`

use grass_orbits::formats::graph_to_dot;
use grass_orbits::poset::{build_graph, EdgeKind};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, default: usize| args.get(i).and_then(|a| a.parse().ok()).unwrap_or(default);
    let (n, k, l) = (num(0, 5), num(1, 2), num(2, 2));
    let g = build_graph(n, k, l).unwrap_or_else(|e| panic!("{e}"));
    if args.iter().any(|a| a == "--dot") {
        print!("{}", graph_to_dot(&g));
        return;
    }
    let raising = g.edges().iter().filter(|e| e.kind == EdgeKind::RankRaising).count();
    println!(
        "(n, k, l) = ({n}, {k}, {l}): {} orbits, {} edges ({raising} rank-raising)",
        g.vertices().len(),
        g.edges().len()
    );
    for d in g.strata_range() {
        let members = g.stratum_vertices(d);
        let sink = g.sinks_in_stratum(d)[0];
        println!(
            "  d = {d}: {:4} orbits, sink {} of dim {}",
            members.len(),
            g.vertices()[sink],
            g.dim(sink)
        );
    }
}
