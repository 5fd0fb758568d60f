//! Classifies every pair of subspaces over a small prime field and counts
//! the points of each orbit.

use std::collections::BTreeMap;

use grass_orbits::canonical::canonical_datum;
use grass_orbits::field::PrimeField;
use grass_orbits::points::grassmannian_points;
use grass_orbits::poset::enumerate_orbits;

fn main() {
    let (n, k, l, q) = (3, 1, 2, 3);
    let f = PrimeField::new(q).unwrap();
    let mut counts = BTreeMap::new();
    for u in grassmannian_points(&f, n, k) {
        for w in grassmannian_points(&f, n, l) {
            *counts.entry(canonical_datum(&u, &w).unwrap()).or_insert(0usize) += 1;
        }
    }
    for (d, c) in &counts {
        println!("{c:4} points  dim {}  {d}", d.dimension().unwrap());
    }
    let all = enumerate_orbits(n, k, l).unwrap();
    println!("{} data seen, {} enumerated", counts.len(), all.len());
    assert!(all.iter().eq(counts.keys()));
}
