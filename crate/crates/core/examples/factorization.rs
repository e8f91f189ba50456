//! The arithmetic kernel: factorization (trial division, then Pollard rho),
//! divisor tables, Euler's totient and the Möbius function.
//!
//!     cargo run --example factorization -- 18446744073709551557

use restricted_congruence::arith::{divisors, factorize};

fn main() {
    let inputs: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("positive integer"))
        .collect();
    let inputs = if inputs.is_empty() {
        vec![1, 12, 360, 720720, 1_000_003 * 998_244_353, 18_446_744_073_709_551_557]
    } else {
        inputs
    };
    for n in inputs {
        let f = factorize(n).expect("n ≥ 1");
        let pretty: Vec<String> = f
            .factors()
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        println!(
            "{n} = {}  τ={} φ={} μ={}",
            if pretty.is_empty() { "1".into() } else { pretty.join(" · ") },
            f.divisor_count(),
            f.totient(),
            f.moebius()
        );
    }
    println!("divisors of 36: {:?}", divisors(36).unwrap().as_slice());
}
