//! The full distribution of sums over residues, and the fact that it adds up
//! to the number of constrained tuples.
//!
//!     cargo run --example spectrum -- 12 1:2,3:1

use restricted_congruence::cli::parse_kappa;
use restricted_congruence::{spectrum, total_solutions, ConstraintProfile};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|s| s.parse().expect("n")).unwrap_or(12);
    let kappa = args.next().unwrap_or_else(|| "1:2,3:1".into());
    let profile = ConstraintProfile::new(n, parse_kappa(&kappa, n).expect("kappa")).unwrap();

    let s = spectrum(&profile).unwrap();
    println!("{profile}");
    for (b, c) in s.counts().iter().enumerate() {
        println!("  b = {b:>3}: {c}");
    }
    println!("sum over b = {}, constrained tuples = {}", s.total(), total_solutions(&profile));
    let symmetric = (0..n as i128).all(|b| s.at(b) == s.at(-b));
    println!("N(b) = N(-b) for every b: {symmetric}");
}
