//! Ramanujan sums by the closed form, by literal exponential sums and by the
//! divisor sum, plus the class exponential sums the counting formula uses.
//!
//!     cargo run --example ramanujan_sums

use restricted_congruence::ramanujan::{
    class_exponential_sum, ramanujan_direct, ramanujan_divisor_sum, ramanujan_exact,
    RamanujanQuery,
};

fn main() {
    println!("c_q(m) for q = 1..12, m = 0..12 (closed form)");
    print!("{:>4}", "q\\m");
    for m in 0..=12 {
        print!("{m:>5}");
    }
    println!();
    for q in 1..=12u64 {
        print!("{q:>4}");
        for m in 0..=12i128 {
            print!("{:>5}", ramanujan_exact(RamanujanQuery::new(q, m)).unwrap());
        }
        println!();
    }

    for (q, m) in [(4u64, 2i128), (6, 4), (9, 3), (12, 0), (360, -84)] {
        let query = RamanujanQuery::new(q, m);
        println!(
            "c_{q}({m}): exact {}, direct {}, divisor-sum {}",
            ramanujan_exact(query).unwrap(),
            ramanujan_direct(query).unwrap(),
            ramanujan_divisor_sum(query).unwrap()
        );
    }

    // Σ over {x : (x, 12) = 4} of e(mx/12) equals c_3(m)
    for m in 0..6 {
        println!("class D=4 of n=12, m={m}: {}", class_exponential_sum(12, 4, m).unwrap());
    }
}
