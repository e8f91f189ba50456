//! Counting solutions of `x₁ + ⋯ + x_k ≡ b (mod n)` where a prescribed
//! number `κ_l` of the variables lies in each gcd class
//! `C_l = {1 ≤ x ≤ n : (x, n) = D_l}`.
//!
//! The count is
//!
//! ```text
//!     N(b) = (1/n) · Σ_{d | n} c_{n/d}(b) · Π_l c_{n/D_l}(d)^{κ_l}
//! ```
//!
//! evaluated over exact integers, with the division by `n` checked rather
//! than assumed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Factorization};
use crate::ramanujan::DivisorRamanujan;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{d} is not a divisor of {n}")]
    NotADivisor { n: u64, d: u64 },
    #[error("divisor sum {divisor_sum} for n = {n}, b = {b} is not divisible by n")]
    Integrality {
        n: u64,
        b: u64,
        divisor_sum: BigInt,
    },
    #[error("divisor sum {divisor_sum} for n = {n}, b = {b} is negative")]
    Negative {
        n: u64,
        b: u64,
        divisor_sum: BigInt,
    },
}

impl CountError {
    /// True for failures that indicate a broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, CountError::Integrality { .. } | CountError::Negative { .. })
    }
}

/// Modulus together with the number of variables confined to each gcd class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawProfile", into = "RawProfile")]
pub struct ConstraintProfile {
    n: u64,
    kappa: BTreeMap<u64, u64>,
}

#[derive(Serialize, Deserialize)]
struct RawProfile {
    n: u64,
    kappa: BTreeMap<u64, u64>,
}

impl TryFrom<RawProfile> for ConstraintProfile {
    type Error = CountError;

    fn try_from(raw: RawProfile) -> Result<Self, CountError> {
        ConstraintProfile::new(raw.n, raw.kappa)
    }
}

impl From<ConstraintProfile> for RawProfile {
    fn from(p: ConstraintProfile) -> Self {
        RawProfile {
            n: p.n,
            kappa: p.kappa,
        }
    }
}

impl ConstraintProfile {
    /// Every key must divide `n`; zero multiplicities are dropped.
    pub fn new(
        n: u64,
        kappa: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, CountError> {
        if n == 0 {
            return Err(CountError::ZeroModulus);
        }
        let mut map = BTreeMap::new();
        for (d, k) in kappa {
            if d == 0 || !n.is_multiple_of(d) {
                return Err(CountError::NotADivisor { n, d });
            }
            if k > 0 {
                *map.entry(d).or_insert(0) += k;
            }
        }
        Ok(ConstraintProfile { n, kappa: map })
    }

    pub fn empty(n: u64) -> Result<Self, CountError> {
        Self::new(n, [])
    }

    /// Profile for the per-variable conditions `(x_i, n) = t_i`. `Ok(None)`
    /// when some `t_i` does not divide `n`, i.e. its class is empty.
    pub fn from_gcds(n: u64, gcds: &[u64]) -> Result<Option<Self>, CountError> {
        if n == 0 {
            return Err(CountError::ZeroModulus);
        }
        if gcds.iter().any(|&t| t == 0 || !n.is_multiple_of(t)) {
            return Ok(None);
        }
        Self::new(n, gcds.iter().map(|&t| (t, 1))).map(Some)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kappa(&self) -> &BTreeMap<u64, u64> {
        &self.kappa
    }

    pub fn multiplicity(&self, d: u64) -> u64 {
        self.kappa.get(&d).copied().unwrap_or(0)
    }

    /// Total number of variables.
    pub fn k(&self) -> u64 {
        self.kappa.values().sum()
    }

    pub fn with_added(&self, d: u64, count: u64) -> Result<Self, CountError> {
        Self::new(
            self.n,
            self.kappa.iter().map(|(&a, &b)| (a, b)).chain([(d, count)]),
        )
    }

    /// One divisor per variable in ascending class order.
    pub fn gcd_list(&self) -> Vec<u64> {
        self.kappa
            .iter()
            .flat_map(|(&d, &k)| std::iter::repeat_n(d, k as usize))
            .collect()
    }
}

impl fmt::Display for ConstraintProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} kappa={{", self.n)?;
        for (i, (d, k)) in self.kappa.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}:{k}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Convolution,
    Naive,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Formula, Method::Convolution, Method::Naive];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Convolution => "convolution",
            Method::Naive => "naive",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "formula" => Ok(Method::Formula),
            "convolution" => Ok(Method::Convolution),
            "naive" => Ok(Method::Naive),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// An exact count plus how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionCount {
    pub value: BigUint,
    pub method: Method,
    pub elapsed: Duration,
}

/// Counts for every residue `b = 0, …, n−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    n: u64,
    counts: Vec<BigUint>,
}

impl Spectrum {
    pub fn new(n: u64, counts: Vec<BigUint>) -> Self {
        assert_eq!(counts.len() as u64, n, "spectrum length must equal n");
        Spectrum { n, counts }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<BigUint> {
        self.counts
    }

    /// Count at any integer `b`, reduced mod n.
    pub fn at(&self, b: i128) -> &BigUint {
        &self.counts[reduce(b, self.n) as usize]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

pub(crate) fn reduce(b: i128, n: u64) -> u64 {
    b.rem_euclid(n as i128) as u64
}

/// Precomputed divisor weights `W(d) = Π_l c_{n/D_l}(d)^{κ_l}` for one
/// profile; evaluates `N(b)` for any residue in O(τ(n)) big-integer steps.
#[derive(Debug, Clone)]
pub struct FormulaEvaluator {
    n: u64,
    table: DivisorRamanujan,
    weights: Vec<BigInt>,
}

impl FormulaEvaluator {
    pub fn new(profile: &ConstraintProfile) -> Self {
        let n = profile.n();
        let f = arith::factorize(n).expect("profile modulus is positive");
        Self::with_factorization(profile, &f)
    }

    pub fn with_factorization(profile: &ConstraintProfile, f: &Factorization) -> Self {
        debug_assert_eq!(f.value(), profile.n());
        let n = profile.n();
        let table = DivisorRamanujan::new(f);
        let weights = table
            .divisors()
            .iter()
            .map(|d| {
                let mut w = BigInt::one();
                for (&class, &k) in profile.kappa() {
                    let c = table.eval(n / class, d as i128).expect("n/D divides n");
                    if c == 0 {
                        return BigInt::zero();
                    }
                    w *= Pow::pow(BigInt::from(c), k);
                }
                w
            })
            .collect();
        FormulaEvaluator { n, table, weights }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `Σ_{d|n} c_{n/d}(b)·W(d)`, before dividing by n.
    pub fn divisor_sum(&self, b: i128) -> BigInt {
        let b = reduce(b, self.n) as i128;
        let mut acc = BigInt::zero();
        for (d, w) in self.table.divisors().iter().zip(&self.weights) {
            if w.is_zero() {
                continue;
            }
            let c = self.table.eval(self.n / d, b).expect("n/d divides n");
            if c != 0 {
                acc += w * c;
            }
        }
        acc
    }

    pub fn count(&self, b: i128) -> Result<BigUint, CountError> {
        let sum = self.divisor_sum(b);
        let b = reduce(b, self.n);
        let (quot, rem) = sum.div_rem(&BigInt::from(self.n));
        if !rem.is_zero() {
            return Err(CountError::Integrality {
                n: self.n,
                b,
                divisor_sum: sum,
            });
        }
        if quot.is_negative() {
            return Err(CountError::Negative {
                n: self.n,
                b,
                divisor_sum: sum,
            });
        }
        Ok(quot.to_biguint().expect("nonnegative"))
    }
}

/// Exact number of constrained tuples with `Σ x_i ≡ b (mod n)`.
pub fn count_solutions(profile: &ConstraintProfile, b: i128) -> Result<SolutionCount, CountError> {
    let start = Instant::now();
    let value = FormulaEvaluator::new(profile).count(b)?;
    Ok(SolutionCount {
        value,
        method: Method::Formula,
        elapsed: start.elapsed(),
    })
}

/// Counts under per-variable conditions `(x_i, n) = t_i`. A `t_i` that does
/// not divide `n` has an empty class and yields zero.
pub fn count_from_gcd_list(n: u64, b: i128, gcds: &[u64]) -> Result<SolutionCount, CountError> {
    let start = Instant::now();
    match ConstraintProfile::from_gcds(n, gcds)? {
        Some(profile) => count_solutions(&profile, b),
        None => Ok(SolutionCount {
            value: BigUint::zero(),
            method: Method::Formula,
            elapsed: start.elapsed(),
        }),
    }
}

pub fn spectrum(profile: &ConstraintProfile) -> Result<Spectrum, CountError> {
    let eval = FormulaEvaluator::new(profile);
    let counts = (0..profile.n())
        .map(|b| eval.count(b as i128))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Spectrum::new(profile.n(), counts))
}

/// `Π_l φ(n/D_l)^{κ_l}`: constrained tuples before imposing the congruence.
pub fn total_solutions(profile: &ConstraintProfile) -> BigUint {
    let n = profile.n();
    let f = arith::factorize(n).expect("profile modulus is positive");
    profile
        .kappa()
        .iter()
        .map(|(&d, &k)| {
            let phi = f.restrict(n / d).expect("n/D divides n").totient();
            Pow::pow(BigUint::from(phi), k)
        })
        .product()
}

/// Sign-aware helper used by the audit: `Some(value)` iff `sum / n` is a
/// nonnegative integer.
pub(crate) fn exact_quotient(sum: &BigInt, n: u64) -> Option<BigUint> {
    let (q, r) = sum.div_rem(&BigInt::from(n));
    if r.is_zero() && q.sign() != Sign::Minus {
        q.to_biguint()
    } else {
        None
    }
}
