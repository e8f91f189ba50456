//! Evaluates both readings of the closed-form divisor sum against the oracle
//! and prints the agreement statistics and first counterexample of each.
//!
//!     cargo run --release --example orientation_audit -- 48 4

use restricted_congruence::audit::adjudicate_orientations;

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max: u64 = args.next().map(|s| s.parse().expect("n_max")).unwrap_or(24);
    let k_max: u64 = args.next().map(|s| s.parse().expect("k_max")).unwrap_or(3);

    let report = adjudicate_orientations(n_max, k_max).expect("within audit limits");
    for s in &report.orientations {
        println!(
            "{:<22} {:>7}/{:<7} agree  non-integral {:>6}  negative {:>6}",
            s.form.route_name(),
            s.agreements,
            s.instances,
            s.non_integral,
            s.negative
        );
        if let Some(cx) = &s.first_counterexample {
            println!(
                "    first counterexample: {} b={}: divisor sum {}, oracle count {}",
                cx.profile, cx.b, cx.divisor_sum, cx.oracle
            );
        }
    }
    println!("{}", serde_json::to_string_pretty(&report.values).unwrap());
}
