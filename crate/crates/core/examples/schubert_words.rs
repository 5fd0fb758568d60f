//! Reduced words of Grassmannian permutations read off Young diagrams.

use grass_orbits::words::{grassmannian_permutation, grassmannian_word};
use grass_orbits::young::YoungDiagram;

fn main() {
    let n = 7;
    for jumps in [vec![3], vec![2, 3], vec![2, 5, 7], vec![4, 6, 7]] {
        let diagram = YoungDiagram::from_vertical_set(n, &jumps);
        let w = grassmannian_word(n, jumps.len(), &jumps);
        println!("jumps {jumps:?}, rows {:?}", diagram.rows());
        println!("  word {:?}  reduced: {}", w.word, w.is_reduced());
        println!("  product {:?} = {:?}", w.permutation(), grassmannian_permutation(n, &jumps));
    }
}
