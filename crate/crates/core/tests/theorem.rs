//! Cross-module properties: the closed form against both oracles on
//! randomly drawn instances somewhat beyond the acceptance grid.

use num_bigint::BigUint;
use proptest::prelude::*;

use restricted_congruence::arith;
use restricted_congruence::oracle::{self, DEFAULT_ENUMERATION_BUDGET};
use restricted_congruence::{count_solutions, spectrum, total_solutions, ConstraintProfile};

fn profile_strategy(n_max: u64, k_max: u64) -> impl Strategy<Value = ConstraintProfile> {
    (1..=n_max).prop_flat_map(move |n| {
        let divs = arith::divisors(n).unwrap().as_slice().to_vec();
        let len = divs.len();
        proptest::collection::vec(0..len, 0..=k_max as usize).prop_map(move |picks| {
            ConstraintProfile::new(n, picks.into_iter().map(|i| (divs[i], 1))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formula_matches_convolution_up_to_120(p in profile_strategy(120, 6)) {
        let formula = spectrum(&p).unwrap();
        let conv = oracle::convolution_spectrum(&p).unwrap();
        prop_assert_eq!(&formula, &conv);
        prop_assert_eq!(formula.total(), total_solutions(&p));
    }

    #[test]
    fn formula_matches_enumeration_when_affordable(p in profile_strategy(60, 5)) {
        prop_assume!(total_solutions(&p) <= BigUint::from(200_000u32));
        let formula = spectrum(&p).unwrap();
        let enumd = oracle::enumeration_spectrum(&p, DEFAULT_ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(formula, enumd);
    }

    #[test]
    fn reflection_b_to_minus_b(p in profile_strategy(60, 8), b in 0i128..60) {
        let plus = count_solutions(&p, b).unwrap().value;
        let minus = count_solutions(&p, -b).unwrap().value;
        prop_assert_eq!(&plus, &minus);
        let conv = oracle::convolution_spectrum(&p).unwrap();
        prop_assert_eq!(conv.at(b), conv.at(-b));
        prop_assert_eq!(conv.at(b), &plus);
    }
}
