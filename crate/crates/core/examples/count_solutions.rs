//! Counting solutions of x1 + ... + xk ≡ b (mod n) under gcd-class constraints,
//! through both input surfaces: per-class multiplicities and per-variable gcds.
//!
//!     cargo run --example count_solutions

use restricted_congruence::{count_from_gcd_list, count_solutions, ConstraintProfile};

fn main() {
    // two units mod 4 summing to 0: (1, 3) and (3, 1)
    let units = ConstraintProfile::new(4, [(1, 2)]).unwrap();
    println!("{units}, b=0 -> {}", count_solutions(&units, 0).unwrap().value);

    // one unit and one element with gcd 2 mod 6, summing to 3: 1+2 and 5+4
    let mixed = ConstraintProfile::new(6, [(1, 1), (2, 1)]).unwrap();
    println!("{mixed}, b=3 -> {}", count_solutions(&mixed, 3).unwrap().value);

    // the same instance phrased as (x1, 6) = 2, (x2, 6) = 1
    let c = count_from_gcd_list(6, 3, &[2, 1]).unwrap();
    println!("gcds [2, 1] mod 6, b=3 -> {} ({} in {:?})", c.value, c.method, c.elapsed);

    // 4 does not divide 6, so no x has (x, 6) = 4
    println!("gcds [4] mod 6, b=1 -> {}", count_from_gcd_list(6, 1, &[4]).unwrap().value);

    // counts get large quickly; everything stays exact
    let big = ConstraintProfile::new(1000, [(1, 40), (8, 25), (125, 10)]).unwrap();
    let c = count_solutions(&big, 18).unwrap();
    println!("{big}, b=18 -> {} ({} digits)", c.value, c.value.to_string().len());
}
