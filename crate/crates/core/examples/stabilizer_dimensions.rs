//! Orbit dimension three ways: the hook formula, the structured stabilizer
//! system and the generic Lie-algebra stabilizer.

use grass_orbits::field::Rationals;
use grass_orbits::stabilizer::{
    orbit_dim_from_stabilizer, stabilizer_dim_oracle, stabilizer_system, stabilizer_system_literal,
};
use grass_orbits::young::OrbitDatum;

fn main() {
    let data = [
        OrbitDatum::new(2, 1, 1, vec![2], vec![], vec![(1, 2)]).unwrap(),
        OrbitDatum::from_parts(3, vec![3], vec![2], vec![(1, 3)]).unwrap(),
        OrbitDatum::new(9, 4, 3, vec![3, 5, 6, 9], vec![2, 5], vec![(7, 9)]).unwrap(),
        OrbitDatum::new(8, 3, 4, vec![6, 7, 8], vec![5], vec![(2, 8), (3, 7), (4, 6)]).unwrap(),
    ];
    for d in &data {
        let system = stabilizer_system(d).unwrap();
        let literal = stabilizer_system_literal(d).unwrap();
        println!("{d}");
        println!("  hook formula        {}", d.dimension().unwrap());
        println!("  stabilizer system   {}", orbit_dim_from_stabilizer(d.n, system.nullity(&Rationals)));
        println!("  literal system      {}", orbit_dim_from_stabilizer(d.n, literal.nullity(&Rationals)));
        println!("  Lie-algebra oracle  {}", orbit_dim_from_stabilizer(d.n, stabilizer_dim_oracle(d).unwrap()));
        println!("  torus part          {} = n - rank", system.diagonal_nullity(&Rationals));
    }
}
