//! Exact integer arithmetic functions: gcd, factorization, divisors,
//! Euler's totient, the Möbius function and the divisor count.
//!
//! Moduli are `u64`. Everything built on top of them (Ramanujan sums,
//! solution counts) is widened to `i128` or arbitrary precision as needed.

mod divisors;
mod factor;

pub use divisors::DivisorTable;
pub use factor::is_prime;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("expected a positive integer, got 0")]
    NonPositive,
}

/// Greatest common divisor of two signed integers, `gcd(0, 0) = 0`.
pub fn gcd(a: i128, b: i128) -> u128 {
    gcd_u128(a.unsigned_abs(), b.unsigned_abs())
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd_u128(a as u128, b as u128) as u64
}

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the prime powers back together.
    pub fn product(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn moebius(&self) -> i8 {
        if self.factors.iter().any(|&(_, e)| e > 1) {
            0
        } else if self.factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// τ(n) = Π (e + 1).
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    pub fn divisors(&self) -> DivisorTable {
        DivisorTable::from_factorization(self)
    }

    /// Factors a divisor `d` of `self.value()` over the primes already known,
    /// without running the general factorizer. `None` if `d` does not divide.
    pub fn restrict(&self, d: u64) -> Option<Factorization> {
        if d == 0 || !self.value.is_multiple_of(d) {
            return None;
        }
        let mut rest = d;
        let mut factors = Vec::new();
        for &(p, _) in &self.factors {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        debug_assert_eq!(rest, 1);
        Some(Factorization { value: d, factors })
    }
}

/// Complete factorization of `n ≥ 1`: trial division up to 10⁶, then
/// Miller–Rabin and Pollard–Brent rho on whatever cofactor remains.
pub fn factorize(n: u64) -> Result<Factorization, ArithError> {
    if n == 0 {
        return Err(ArithError::NonPositive);
    }
    let mut factors = factor::prime_factors(n);
    factors.sort_unstable();
    let mut grouped: Vec<(u64, u32)> = Vec::new();
    for p in factors {
        match grouped.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => grouped.push((p, 1)),
        }
    }
    Ok(Factorization {
        value: n,
        factors: grouped,
    })
}

pub fn divisors(n: u64) -> Result<DivisorTable, ArithError> {
    Ok(factorize(n)?.divisors())
}

pub fn totient(n: u64) -> Result<u64, ArithError> {
    Ok(factorize(n)?.totient())
}

pub fn moebius(n: u64) -> Result<i8, ArithError> {
    Ok(factorize(n)?.moebius())
}

pub fn divisor_count(n: u64) -> Result<u64, ArithError> {
    Ok(factorize(n)?.divisor_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coprime_count(n: u64) -> u64 {
        (1..=n).filter(|&j| gcd_u64(j, n) == 1).count() as u64
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(4, 6), 2);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-12, 18), 6);
        assert_eq!(gcd(0, -5), 5);
    }

    #[test]
    fn factorize_small() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        let f = factorize(720720).unwrap();
        assert_eq!(
            f.factors(),
            &[(2, 4), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1)]
        );
        assert_eq!(f.product(), 720720);
        assert_eq!(factorize(0), Err(ArithError::NonPositive));
    }

    #[test]
    fn factorize_beyond_trial_division() {
        // two primes above 10^6
        let (p, q) = (1_000_003u64, 998_244_353u64);
        assert_eq!(factorize(p * q).unwrap().factors(), &[(p, 1), (q, 1)]);
        let big = 18_446_744_073_709_551_557u64; // largest prime below 2^64
        assert_eq!(factorize(big).unwrap().factors(), &[(big, 1)]);
        let sq = 4_294_967_291u64 * 4_294_967_291u64;
        assert_eq!(factorize(sq).unwrap().factors(), &[(4_294_967_291, 2)]);
        let mixed = 2u64.pow(3) * 1_000_000_007 * 1_000_000_009;
        let f = factorize(mixed).unwrap();
        assert_eq!(
            f.factors(),
            &[(2, 3), (1_000_000_007, 1), (1_000_000_009, 1)]
        );
    }

    #[test]
    fn totient_and_moebius_cases() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(4).unwrap(), 2);
        assert_eq!(totient(360).unwrap(), coprime_count(360));
        assert_eq!(totient(360).unwrap(), 96);
        assert_eq!(totient(720720).unwrap(), 138240);
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(4).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), -1);
        assert_eq!(totient(0), Err(ArithError::NonPositive));
        assert_eq!(moebius(0), Err(ArithError::NonPositive));
    }

    #[test]
    fn totient_matches_coprime_count() {
        for n in 1..=500 {
            assert_eq!(totient(n).unwrap(), coprime_count(n), "n = {n}");
        }
    }

    #[test]
    fn divisor_sums_up_to_ten_thousand() {
        for n in 1..=10_000u64 {
            let f = factorize(n).unwrap();
            let table = f.divisors();
            let phi_sum: u64 = table.iter().map(|d| f.restrict(d).unwrap().totient()).sum();
            assert_eq!(phi_sum, n, "Σφ(d) for n = {n}");
            let mu_sum: i64 = table
                .iter()
                .map(|d| f.restrict(d).unwrap().moebius() as i64)
                .sum();
            assert_eq!(mu_sum, (n == 1) as i64, "Σμ(d) for n = {n}");
            assert_eq!(table.len() as u64, f.divisor_count());
        }
    }

    #[test]
    fn restrict_rejects_non_divisors() {
        let f = factorize(36).unwrap();
        assert!(f.restrict(5).is_none());
        assert!(f.restrict(0).is_none());
        assert_eq!(f.restrict(12).unwrap(), factorize(12).unwrap());
    }

    proptest! {
        #[test]
        fn factorization_round_trips(n in 1u64..u64::MAX) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.product(), n as u128);
            for w in f.factors().windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            for &(p, e) in f.factors() {
                prop_assert!(e >= 1);
                prop_assert!(is_prime(p));
            }
        }

        #[test]
        fn gcd_divides_both(a in any::<i64>(), b in any::<i64>()) {
            let g = gcd(a as i128, b as i128);
            if g != 0 {
                prop_assert_eq!((a as i128).rem_euclid(g as i128), 0);
                prop_assert_eq!((b as i128).rem_euclid(g as i128), 0);
            } else {
                prop_assert!(a == 0 && b == 0);
            }
        }
    }
}
