//! Runs every cross-check suite for all `(n, k, l)` up to a bound.
//!
//! `cargo run --release --example verify_suites -- 5`

use grass_orbits::verify::{run_all, VerifyConfig};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let mut failures = 0;
    for n in 2..=max_n {
        for k in 1..n {
            for l in 1..n {
                let reports = run_all(&VerifyConfig::new(n, k, l)).expect("valid parameters");
                for r in reports {
                    if !r.passed {
                        failures += 1;
                    }
                    println!("({n},{k},{l}) {}", serde_json::to_string(&r).unwrap());
                }
            }
        }
    }
    println!("{failures} failing suites");
    std::process::exit(i32::from(failures > 0));
}
