//! Cross-validates the closed form against exhaustive enumeration and exact
//! cyclic convolution on every small profile.
//!
//!     cargo run --release --example oracles -- 20 3

use restricted_congruence::audit::for_each_profile;
use restricted_congruence::oracle::{convolution_spectrum, enumeration_spectrum, DEFAULT_ENUMERATION_BUDGET};
use restricted_congruence::spectrum;

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max: u64 = args.next().map(|s| s.parse().expect("n_max")).unwrap_or(20);
    let k_max: u64 = args.next().map(|s| s.parse().expect("k_max")).unwrap_or(3);

    let mut profiles = 0;
    let mut mismatches = 0;
    for n in 1..=n_max {
        for_each_profile(n, k_max, |p| {
            profiles += 1;
            let formula = spectrum(&p).unwrap();
            let conv = convolution_spectrum(&p).unwrap();
            let enumd = enumeration_spectrum(&p, DEFAULT_ENUMERATION_BUDGET).unwrap();
            if formula != conv || formula != enumd {
                mismatches += 1;
                println!("mismatch at {p}");
            }
        });
    }
    println!("{profiles} profiles with n ≤ {n_max}, k ≤ {k_max}: {mismatches} mismatches");
}
