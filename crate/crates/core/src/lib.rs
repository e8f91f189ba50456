//! Exact counting of restricted linear congruences.
//!
//! Given a modulus `n` and, for each divisor `D` of `n`, a number `κ_D` of
//! variables required to satisfy `(x, n) = D`, this crate counts the tuples
//! `(x₁, …, x_k)` in `{1, …, n}^k` with `x₁ + ⋯ + x_k ≡ b (mod n)` through a
//! divisor sum of Ramanujan sums, and checks that sum against two
//! formula-free oracles.
//!
//! ```
//! use restricted_congruence::{count_solutions, ConstraintProfile};
//!
//! // two units mod 4 summing to 0: (1, 3) and (3, 1)
//! let profile = ConstraintProfile::new(4, [(1, 2)]).unwrap();
//! assert_eq!(count_solutions(&profile, 0).unwrap().value, 2u32.into());
//! ```

pub mod arith;
pub mod audit;
pub mod cli;
pub mod counting;
pub mod oracle;
pub mod ramanujan;
mod serde_decimal;

pub use counting::{
    count_from_gcd_list, count_solutions, spectrum, total_solutions, ConstraintProfile, CountError,
    FormulaEvaluator, Method, SolutionCount, Spectrum,
};
pub use ramanujan::{ramanujan_exact, RamanujanQuery};
