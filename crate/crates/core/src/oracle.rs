//! Formula-free ground truth: exhaustive enumeration of constrained tuples and
//! exact cyclic convolution of class indicator vectors.

use std::ops::{AddAssign, Mul};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::gcd_u64;
use crate::counting::{reduce, total_solutions, ConstraintProfile, CountError, Method, SolutionCount, Spectrum};

/// Default cap on the number of tuples enumeration may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Largest modulus the O(n²) convolution oracle will attempt.
pub const CONVOLUTION_MAX_MODULUS: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Profile(#[from] CountError),
    #[error("enumeration would visit {total} tuples, budget is {budget}")]
    BudgetExceeded { total: BigUint, budget: u64 },
    #[error("convolution oracle limited to n ≤ {limit}, got n = {n}")]
    ConvolutionOutOfBudget { n: u64, limit: u64 },
}

/// 0/1 indicator of `C = {1 ≤ x ≤ n : (x, n) = D}` over residues `0..n`;
/// `x = n` sits at residue 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVector {
    n: u64,
    divisor: u64,
    entries: Vec<u8>,
}

impl ClassVector {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisor(&self) -> u64 {
        self.divisor
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Members of the class in `1..=n`.
    pub fn members(&self) -> Vec<u64> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 1)
            .map(|(r, _)| if r == 0 { self.n } else { r as u64 })
            .collect()
    }

    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }
}

pub fn class_vector(n: u64, d: u64) -> Result<ClassVector, OracleError> {
    if n == 0 {
        return Err(CountError::ZeroModulus.into());
    }
    if d == 0 || !n.is_multiple_of(d) {
        return Err(CountError::NotADivisor { n, d }.into());
    }
    let entries = (0..n)
        .map(|r| {
            let x = if r == 0 { n } else { r };
            (gcd_u64(x, n) == d) as u8
        })
        .collect();
    Ok(ClassVector { n, divisor: d, entries })
}

/// Length-preserving cyclic convolution `(a ⊛ b)[r] = Σ_{i+j≡r} a[i]·b[j]`.
pub fn cyclic_convolve<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero + AddAssign,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    assert_eq!(a.len(), b.len(), "cyclic convolution needs equal lengths");
    let n = a.len();
    let mut out = vec![T::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[(i + j) % n] += x * y;
        }
    }
    out
}

fn delta<T: Clone + Zero + One>(n: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[0] = T::one();
    v
}

fn convolution_power<T>(base: Vec<T>, mut exp: u64) -> Vec<T>
where
    T: Clone + Zero + One + AddAssign,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    let mut acc = delta(base.len());
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = cyclic_convolve(&acc, &sq);
        }
        exp >>= 1;
        if exp > 0 {
            sq = cyclic_convolve(&sq, &sq);
        }
    }
    acc
}

fn spectrum_in<T>(profile: &ConstraintProfile, order: &[u64]) -> Vec<T>
where
    T: Clone + Zero + One + AddAssign,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    let n = profile.n();
    let mut acc = delta::<T>(n as usize);
    for &d in order {
        let k = profile.multiplicity(d);
        let cv = class_vector(n, d).expect("profile keys divide n");
        let base = cv
            .entries()
            .iter()
            .map(|&e| if e == 1 { T::one() } else { T::zero() })
            .collect();
        acc = cyclic_convolve(&acc, &convolution_power(base, k));
    }
    acc
}

fn check_convolution_budget(profile: &ConstraintProfile) -> Result<(), OracleError> {
    if profile.n() > CONVOLUTION_MAX_MODULUS {
        return Err(OracleError::ConvolutionOutOfBudget {
            n: profile.n(),
            limit: CONVOLUTION_MAX_MODULUS,
        });
    }
    Ok(())
}

/// Full spectrum from the product of class-vector convolution powers,
/// multiplying the classes in the given order.
pub fn convolution_spectrum_ordered(
    profile: &ConstraintProfile,
    order: &[u64],
) -> Result<Spectrum, OracleError> {
    check_convolution_budget(profile)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    let keys: Vec<u64> = profile.kappa().keys().copied().collect();
    assert_eq!(sorted, keys, "order must list each class of the profile once");
    // counts never exceed the total, so a machine word suffices when it fits
    let counts = if total_solutions(profile).bits() < 127 {
        spectrum_in::<u128>(profile, order)
            .into_iter()
            .map(BigUint::from)
            .collect()
    } else {
        spectrum_in::<BigUint>(profile, order)
    };
    Ok(Spectrum::new(profile.n(), counts))
}

pub fn convolution_spectrum(profile: &ConstraintProfile) -> Result<Spectrum, OracleError> {
    let order: Vec<u64> = profile.kappa().keys().copied().collect();
    convolution_spectrum_ordered(profile, &order)
}

pub fn count_by_convolution(profile: &ConstraintProfile, b: i128) -> Result<SolutionCount, OracleError> {
    let start = Instant::now();
    let s = convolution_spectrum(profile)?;
    Ok(SolutionCount {
        value: s.at(b).clone(),
        method: Method::Convolution,
        elapsed: start.elapsed(),
    })
}

/// Spectrum by visiting every tuple; positions are filled class by class in
/// ascending divisor order.
pub fn enumeration_spectrum(profile: &ConstraintProfile, budget: u64) -> Result<Spectrum, OracleError> {
    let total = total_solutions(profile);
    if total > BigUint::from(budget) {
        return Err(OracleError::BudgetExceeded { total, budget });
    }
    let n = profile.n();
    let mut positions: Vec<Vec<u64>> = Vec::new();
    for (&d, &k) in profile.kappa() {
        let members = class_vector(n, d)?.members();
        for _ in 0..k {
            positions.push(members.clone());
        }
    }
    let mut counts = vec![0u64; n as usize];
    walk(&positions, 0, n, &mut counts);
    Ok(Spectrum::new(n, counts.into_iter().map(BigUint::from).collect()))
}

fn walk(positions: &[Vec<u64>], partial: u64, n: u64, counts: &mut [u64]) {
    match positions.split_first() {
        None => counts[partial as usize] += 1,
        Some((head, rest)) => {
            for &x in head {
                walk(rest, (partial + x) % n, n, counts);
            }
        }
    }
}

pub fn count_by_enumeration(
    profile: &ConstraintProfile,
    b: i128,
    budget: u64,
) -> Result<SolutionCount, OracleError> {
    let start = Instant::now();
    let s = enumeration_spectrum(profile, budget)?;
    Ok(SolutionCount {
        value: s.counts()[reduce(b, profile.n()) as usize].clone(),
        method: Method::Naive,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;
    use proptest::prelude::*;

    fn profile(n: u64, kappa: &[(u64, u64)]) -> ConstraintProfile {
        ConstraintProfile::new(n, kappa.iter().copied()).unwrap()
    }

    #[test]
    fn class_vector_examples() {
        assert_eq!(class_vector(4, 1).unwrap().entries(), &[0, 1, 0, 1]);
        assert_eq!(class_vector(6, 2).unwrap().entries(), &[0, 0, 1, 0, 1, 0]);
        assert_eq!(class_vector(6, 6).unwrap().entries(), &[1, 0, 0, 0, 0, 0]);
        assert_eq!(class_vector(6, 6).unwrap().members(), vec![6]);
        assert!(matches!(
            class_vector(6, 4),
            Err(OracleError::Profile(CountError::NotADivisor { n: 6, d: 4 }))
        ));
    }

    #[test]
    fn class_sizes_are_totients() {
        for n in 1..=200u64 {
            for d in arith::divisors(n).unwrap().iter() {
                let cv = class_vector(n, d).unwrap();
                assert!(cv.entries().iter().all(|&e| e <= 1));
                assert_eq!(cv.size(), arith::totient(n / d).unwrap());
            }
        }
    }

    #[test]
    fn convolution_examples() {
        let p = profile(4, &[(1, 2)]);
        let s = convolution_spectrum(&p).unwrap();
        let expected: Vec<BigUint> = [2u8, 0, 2, 0].iter().map(|&v| BigUint::from(v)).collect();
        assert_eq!(s.counts(), expected.as_slice());
        assert_eq!(count_by_convolution(&p, 1).unwrap().value, BigUint::zero());
        assert_eq!(
            count_by_convolution(&profile(1, &[(1, 5)]), 0).unwrap().value,
            BigUint::one()
        );
    }

    #[test]
    fn enumeration_examples() {
        let v = |n, k: &[(u64, u64)], b| {
            count_by_enumeration(&profile(n, k), b, 1_000_000).unwrap().value
        };
        assert_eq!(v(5, &[(1, 2)], 0), BigUint::from(4u8));
        assert_eq!(v(6, &[(1, 1), (2, 1)], 3), BigUint::from(2u8));
        assert_eq!(v(6, &[(3, 1)], 3), BigUint::one());
    }

    #[test]
    fn guards() {
        let p = profile(720720, &[(1, 3)]);
        assert_eq!(
            convolution_spectrum(&p),
            Err(OracleError::ConvolutionOutOfBudget {
                n: 720720,
                limit: CONVOLUTION_MAX_MODULUS
            })
        );
        let p = profile(30, &[(1, 8)]);
        match count_by_enumeration(&p, 0, 1000) {
            Err(OracleError::BudgetExceeded { total, budget }) => {
                assert_eq!(total, BigUint::from(8u64.pow(8)));
                assert_eq!(budget, 1000);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn big_integer_path_matches_word_path() {
        // total = 2^200 forces the BigUint branch
        let p = profile(3, &[(1, 200)]);
        let s = convolution_spectrum(&p).unwrap();
        assert_eq!(s.total(), total_solutions(&p));
        // units mod 3 are ±1, so N(b) = #{sign vectors with Σ ≡ b}
        let word = convolution_spectrum(&profile(3, &[(1, 100)])).unwrap();
        assert_eq!(word.total(), BigUint::one() << 100);
    }

    fn small_profile() -> impl Strategy<Value = ConstraintProfile> {
        (1u64..=30).prop_flat_map(|n| {
            let divs = arith::divisors(n).unwrap().as_slice().to_vec();
            let len = divs.len();
            proptest::collection::vec((0..len, 1u64..=2), 0..=3).prop_map(move |picks| {
                ConstraintProfile::new(n, picks.into_iter().map(|(i, k)| (divs[i], k))).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn oracles_agree(p in small_profile()) {
            prop_assume!(p.k() <= 4);
            let conv = convolution_spectrum(&p).unwrap();
            let enumd = enumeration_spectrum(&p, DEFAULT_ENUMERATION_BUDGET).unwrap();
            prop_assert_eq!(&conv, &enumd);
            prop_assert_eq!(conv.total(), total_solutions(&p));
        }

        #[test]
        fn class_order_is_irrelevant(p in small_profile(), seed in any::<u64>()) {
            let mut order: Vec<u64> = p.kappa().keys().copied().collect();
            order.reverse();
            if order.len() > 1 {
                let i = (seed % order.len() as u64) as usize;
                order.swap(0, i);
            }
            prop_assert_eq!(
                convolution_spectrum_ordered(&p, &order).unwrap(),
                convolution_spectrum(&p).unwrap()
            );
        }
    }
}
