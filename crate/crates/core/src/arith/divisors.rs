use std::collections::HashMap;

use super::Factorization;

/// Ascending divisors `D₁ = 1 < … < D_τ = n` with position lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    n: u64,
    divisors: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl DivisorTable {
    pub(super) fn from_factorization(f: &Factorization) -> Self {
        let mut divisors = vec![1u64];
        for &(p, e) in f.factors() {
            let base = divisors.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..base {
                    divisors.push(divisors[i] * pk);
                }
            }
        }
        divisors.sort_unstable();
        let index = divisors.iter().enumerate().map(|(i, &d)| (d, i)).collect();
        DivisorTable {
            n: f.value(),
            divisors,
            index,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    /// Position of `d` in the ascending list, if `d | n`.
    pub fn position(&self, d: u64) -> Option<usize> {
        self.index.get(&d).copied()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.index.contains_key(&d)
    }
}

#[cfg(test)]
mod tests {
    use crate::arith::{divisors, ArithError};

    #[test]
    fn small_tables() {
        assert_eq!(divisors(1).unwrap().as_slice(), &[1]);
        assert_eq!(divisors(6).unwrap().as_slice(), &[1, 2, 3, 6]);
        assert_eq!(divisors(0), Err(ArithError::NonPositive));
    }

    #[test]
    fn thirty_six_matches_trial_division() {
        let brute: Vec<u64> = (1..=36).filter(|d| 36 % d == 0).collect();
        let table = divisors(36).unwrap();
        assert_eq!(table.len(), 9);
        assert_eq!(table.as_slice(), brute.as_slice());
        assert_eq!(table.position(1), Some(0));
        assert_eq!(table.position(36), Some(8));
        assert_eq!(table.position(5), None);
    }

    #[test]
    fn table_invariants() {
        for n in 1..=2000u64 {
            let t = divisors(n).unwrap();
            assert_eq!(t.as_slice()[0], 1);
            assert_eq!(*t.as_slice().last().unwrap(), n);
            assert!(t.iter().all(|d| n % d == 0));
            assert!(t.as_slice().windows(2).all(|w| w[0] < w[1]));
            assert_eq!(t.len(), (1..=n).filter(|d| n % d == 0).count());
        }
    }

    #[test]
    fn highly_composite_count() {
        assert_eq!(divisors(720720).unwrap().len(), 240);
    }
}
