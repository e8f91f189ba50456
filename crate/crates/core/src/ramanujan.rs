//! Ramanujan sums `c_q(m) = Σ_{1≤j≤q, (j,q)=1} e(jm/q)`.
//!
//! Three evaluators are provided. [`ramanujan_exact`] (Hölder's closed form)
//! is the one every other module uses; [`ramanujan_direct`] sums the complex
//! exponentials literally and [`ramanujan_divisor_sum`] uses
//! `Σ_{d | (q,m)} d·μ(q/d)`. The latter two exist to cross-check the first.

use std::f64::consts::TAU;

use num_complex::Complex64;
use thiserror::Error;

use crate::arith::{self, gcd_u64, ArithError, Factorization};

/// Largest modulus the O(q) floating evaluator accepts by default.
pub const DIRECT_BOUND: u64 = 100_000;

/// Maximum distance from an integer tolerated before rounding a direct sum.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RamanujanError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("direct evaluation bounded by q ≤ {bound}, got q = {q}")]
    BoundExceeded { q: u64, bound: u64 },
    #[error("direct sum {value} is {residual:e} away from an integer")]
    NonIntegral { value: f64, residual: f64 },
    #[error("{d} does not divide {n}")]
    NotADivisor { n: u64, d: u64 },
}

impl From<ArithError> for RamanujanError {
    fn from(_: ArithError) -> Self {
        RamanujanError::ZeroModulus
    }
}

/// Arguments of `c_q(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamanujanQuery {
    pub q: u64,
    pub m: i128,
}

impl RamanujanQuery {
    pub fn new(q: u64, m: i128) -> Self {
        RamanujanQuery { q, m }
    }

    fn check(&self) -> Result<(), RamanujanError> {
        if self.q == 0 {
            Err(RamanujanError::ZeroModulus)
        } else {
            Ok(())
        }
    }

    /// Representative of `m` in `0..q`.
    pub fn reduced_argument(&self) -> u64 {
        self.m.rem_euclid(self.q as i128) as u64
    }
}

/// `e(a/q) = exp(2πi·a/q)`, with `a` reduced before dividing.
pub fn unit_root(a: i128, q: u64) -> Complex64 {
    let r = a.rem_euclid(q as i128) as f64 / q as f64;
    Complex64::from_polar(1.0, TAU * r)
}

pub fn ramanujan_direct(query: RamanujanQuery) -> Result<i128, RamanujanError> {
    ramanujan_direct_bounded(query, DIRECT_BOUND)
}

pub fn ramanujan_direct_bounded(query: RamanujanQuery, bound: u64) -> Result<i128, RamanujanError> {
    query.check()?;
    let q = query.q;
    if q > bound {
        return Err(RamanujanError::BoundExceeded { q, bound });
    }
    let m = query.reduced_argument() as u128;
    let sum: Complex64 = (1..=q)
        .filter(|&j| gcd_u64(j, q) == 1)
        .map(|j| unit_root(((j as u128 * m) % q as u128) as i128, q))
        .sum();
    let rounded = sum.re.round();
    let residual = (sum.re - rounded).abs().max(sum.im.abs());
    if residual > INTEGRALITY_TOLERANCE {
        return Err(RamanujanError::NonIntegral {
            value: sum.re,
            residual,
        });
    }
    Ok(rounded as i128)
}

pub fn ramanujan_exact(query: RamanujanQuery) -> Result<i128, RamanujanError> {
    query.check()?;
    let f = arith::factorize(query.q)?;
    Ok(holder(&f, query.m))
}

/// Hölder's evaluation `μ(q/g)·φ(q)/φ(q/g)`, `g = (m, q)`, for a
/// factored modulus.
pub fn holder(q: &Factorization, m: i128) -> i128 {
    // evenness first so the gcd sees a nonnegative argument
    let m = m.unsigned_abs();
    let g = (m % q.value() as u128) as u64;
    let g = gcd_u64(g, q.value());
    let quotient = q
        .restrict(q.value() / g)
        .expect("q/g divides q by construction");
    let mu = quotient.moebius() as i128;
    if mu == 0 {
        return 0;
    }
    mu * (q.totient() / quotient.totient()) as i128
}

pub fn ramanujan_divisor_sum(query: RamanujanQuery) -> Result<i128, RamanujanError> {
    query.check()?;
    let q = query.q;
    let g = gcd_u64(query.reduced_argument(), q);
    let mut total = 0i128;
    for d in arith::divisors(g)?.iter() {
        total += d as i128 * arith::moebius(q / d)? as i128;
    }
    Ok(total)
}

/// `Σ_{1≤x≤n, (x,n)=D} e(mx/n)`, which collapses to `c_{n/D}(m)`.
pub fn class_exponential_sum(n: u64, d: u64, m: i128) -> Result<i128, RamanujanError> {
    if n == 0 {
        return Err(RamanujanError::ZeroModulus);
    }
    if d == 0 || !n.is_multiple_of(d) {
        return Err(RamanujanError::NotADivisor { n, d });
    }
    ramanujan_exact(RamanujanQuery::new(n / d, m))
}

/// Exact `c_q(m)` for every divisor `q` of a fixed modulus, with totients and
/// Möbius values tabulated once from the modulus' factorization.
#[derive(Debug, Clone)]
pub struct DivisorRamanujan {
    divisors: arith::DivisorTable,
    totient: Vec<u64>,
    moebius: Vec<i8>,
}

impl DivisorRamanujan {
    pub fn new(n: &Factorization) -> Self {
        let divisors = n.divisors();
        let (totient, moebius) = divisors
            .iter()
            .map(|d| {
                let f = n.restrict(d).expect("listed divisor");
                (f.totient(), f.moebius())
            })
            .unzip();
        DivisorRamanujan {
            divisors,
            totient,
            moebius,
        }
    }

    pub fn divisors(&self) -> &arith::DivisorTable {
        &self.divisors
    }

    pub fn totient_of(&self, d: u64) -> Option<u64> {
        self.divisors.position(d).map(|i| self.totient[i])
    }

    /// `c_q(m)`; `None` when `q` does not divide the modulus.
    pub fn eval(&self, q: u64, m: i128) -> Option<i128> {
        let iq = self.divisors.position(q)?;
        let g = gcd_u64((m.unsigned_abs() % q as u128) as u64, q);
        let iquot = self.divisors.position(q / g)?;
        let mu = self.moebius[iquot] as i128;
        Some(mu * (self.totient[iq] / self.totient[iquot]) as i128)
    }
}
