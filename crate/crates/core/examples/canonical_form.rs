//! Reads a pair of subspaces in the matrix text format and classifies it.
//!
//! `cargo run --example canonical_form [file]`; without a file a built-in
//! pair in Q^4 is used.

use grass_orbits::canonical::{canonical_point, jump_sets};
use grass_orbits::field::Rationals;
use grass_orbits::formats::{parse_matrix_text, write_matrix_text};

const SAMPLE: &str = "\
field Q
4 2 2
# U
1 2 0 0
0 1 1 1

# W
0 1 0 0
1 0 1/2 3
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => SAMPLE.to_string(),
    };
    let input = parse_matrix_text(&text).unwrap_or_else(|e| panic!("bad input: {e}"));
    let datum = input.classify().unwrap_or_else(|e| panic!("{e}"));
    println!("datum: {datum}");
    println!("dimension: {}", datum.dimension().unwrap());

    let (u, w) = canonical_point(&datum, Rationals).unwrap();
    println!("jump sets of the representative: {:?}", jump_sets(&u, &w).unwrap());
    println!("representative:\n{}", write_matrix_text(&u, &w));
}
