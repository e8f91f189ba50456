//! The finite Fourier transform pair for periodic functions, and the product
//! identity linking a solution spectrum to Ramanujan sums.
//!
//!     cargo run --example fourier_pair

use restricted_congruence::audit::{
    check_fourier_function, check_fourier_pair, check_product_identity, fourier_transform, RouteValue,
};
use restricted_congruence::ConstraintProfile;

use num_complex::Complex64;

fn main() {
    // coefficients of the indicator of residue 3 mod 8
    let mut delta = vec![Complex64::new(0.0, 0.0); 8];
    delta[3] = Complex64::new(1.0, 0.0);
    for (b, c) in fourier_transform(&delta).iter().enumerate() {
        println!("f^({b}) = {:+.4} {:+.4}i", c.re, c.im);
    }
    let mut ints = vec![0i64; 8];
    ints[3] = 1;
    println!("delta round trip: {:?}", check_fourier_function(&ints).unwrap().verdict);

    let r = check_fourier_pair(60, 10, 42).unwrap();
    println!("60-periodic random functions: {:?} {:?}", r.verdict, r.values["max_abs_error"]);

    let p = ConstraintProfile::new(12, [(1, 2), (3, 1)]).unwrap();
    for m in 0..=12 {
        let r = check_product_identity(&p, m).unwrap();
        let (RouteValue::Complex { re, im }, RouteValue::Exact(rhs)) =
            (&r.values["lhs_fourier_sum"], &r.values["rhs_class_product"])
        else {
            unreachable!()
        };
        println!("m={m:>2}: Σ N(b) e(bm/12) = {re:+.3}{im:+.3}i   Π c^κ = {rhs}");
    }
}
