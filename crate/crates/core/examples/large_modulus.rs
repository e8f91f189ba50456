//! The closed form at a scale where the oracles cannot follow: n = 720720
//! (240 divisors) with 100 variables spread over the classes.
//!
//!     cargo run --release --example large_modulus

use std::time::Instant;

use restricted_congruence::arith::divisors;
use restricted_congruence::oracle::count_by_convolution;
use restricted_congruence::{count_solutions, total_solutions, ConstraintProfile};

fn main() {
    let n = 720720;
    let table = divisors(n).unwrap();
    let profile = ConstraintProfile::new(n, table.iter().step_by(2).take(100).map(|d| (d, 1))).unwrap();
    println!("n = {n}, τ(n) = {}, k = {}", table.len(), profile.k());

    let start = Instant::now();
    let c = count_solutions(&profile, 2).unwrap();
    println!(
        "N(2) has {} digits, computed in {:?}; out of {} digits worth of tuples",
        c.value.to_string().len(),
        start.elapsed(),
        total_solutions(&profile).to_string().len()
    );
    match count_by_convolution(&profile, 2) {
        Ok(_) => println!("convolution oracle ran"),
        Err(e) => println!("convolution oracle: {e}"),
    }
}
