//! A raising word from a minimal orbit, replayed step by step.

use grass_orbits::poset::{build_graph, desingularization, raise_candidate};
use grass_orbits::young::OrbitDatum;

fn main() {
    let target = OrbitDatum::new(7, 3, 4, vec![3, 5, 7], vec![4, 6], vec![(1, 7), (2, 3)]).unwrap();
    let g = build_graph(7, 3, 4).unwrap();
    let data = desingularization(&g, &target).unwrap();
    println!("target  {target}");
    println!("minimal {}", data.minimal);
    println!("word    {:?}", data.word);
    println!("Schubert words {:?} and {:?}", data.bs_first.word, data.bs_second.word);

    let mut cur = data.minimal.clone();
    for &i in &data.word {
        let (next, kind) = raise_candidate(&cur, i).expect("each step raises");
        println!("  P_{i} ({kind:?}): dim {} -> {}  {next}", cur.dimension().unwrap(), next.dimension().unwrap());
        cur = next;
    }
    assert_eq!(cur, target);
    data.check().unwrap();
}
