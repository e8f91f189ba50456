//! Numerical and exact checks of the identities the counting formula rests on.
//!
//! * the finite Fourier transform pair for periodic functions,
//! * the product identity `Σ_b N(b)·e(bm/n) = Π_l c_{n/D_l}(m)^{κ_l}` with
//!   `N` taken from the convolution oracle,
//! * the two readings of the closed-form divisor sum, measured against the
//!   oracle over a full grid of small instances.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Pow, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::counting::{exact_quotient, total_solutions, ConstraintProfile, CountError};
use crate::oracle::{self, OracleError};
use crate::ramanujan::{self, unit_root, DivisorRamanujan};
use crate::serde_decimal;

pub const FOURIER_TOLERANCE: f64 = 1e-6;
pub const PRODUCT_TOLERANCE: f64 = 1e-6;
pub const FOURIER_MAX_MODULUS: u64 = 1000;
pub const PRODUCT_MAX_MODULUS: u64 = 200;
pub const PRODUCT_MAX_TOTAL: u64 = 10_000_000;
pub const ADJUDICATION_MAX_MODULUS: u64 = 48;
pub const ADJUDICATION_MAX_K: u64 = 4;

/// Random test functions take values in `-RANGE..=RANGE`.
const RANDOM_VALUE_RANGE: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AuditError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("tolerance violated: {}", .0.discrepancies.first().map(|d| d.detail.as_str()).unwrap_or("?"))]
    ToleranceViolation(Box<AuditReport>),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditInstance {
    FourierPair {
        n: u64,
        samples: u64,
        seed: Option<u64>,
    },
    FourierGrid {
        n_max: u64,
        samples: u64,
        seed: u64,
    },
    ProductIdentity {
        n: u64,
        kappa: BTreeMap<u64, u64>,
        m: i64,
    },
    ProductGrid {
        n_max: u64,
        k_max: u64,
    },
    /// Every profile with `n ≤ n_max`, `Σκ ≤ k_max`, and every residue b.
    Orientation {
        n_max: u64,
        k_max: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum RouteValue {
    #[serde(with = "serde_decimal::bigint")]
    Exact(BigInt),
    Float(f64),
    Complex { re: f64, im: f64 },
}

impl From<Complex64> for RouteValue {
    fn from(z: Complex64) -> Self {
        RouteValue::Complex { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Agree,
    Disagree,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub route: String,
    pub value: RouteValue,
    pub detail: String,
}

/// The two readings of the closed form. `DerivationConsistent` pairs
/// `c_{n/d}(b)` with `Π c_{n/D_l}(d)^{κ_l}`; `Printed` pairs `c_d(b)` with
/// the same product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationForm {
    DerivationConsistent,
    Printed,
}

impl OrientationForm {
    pub const ALL: [OrientationForm; 2] = [OrientationForm::DerivationConsistent, OrientationForm::Printed];

    pub fn route_name(&self) -> &'static str {
        match self {
            OrientationForm::DerivationConsistent => "derivation_consistent",
            OrientationForm::Printed => "printed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub profile: ConstraintProfile,
    pub b: u64,
    #[serde(with = "serde_decimal::biguint")]
    pub oracle: BigUint,
    /// Divisor sum before division by n.
    #[serde(with = "serde_decimal::bigint")]
    pub divisor_sum: BigInt,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrientationSummary {
    pub form: OrientationForm,
    pub instances: u64,
    pub agreements: u64,
    /// Instances where n does not divide the divisor sum.
    pub non_integral: u64,
    pub negative: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl OrientationSummary {
    fn new(form: OrientationForm) -> Self {
        OrientationSummary {
            form,
            instances: 0,
            agreements: 0,
            non_integral: 0,
            negative: 0,
            first_counterexample: None,
        }
    }

    pub fn agreement_rate(&self) -> f64 {
        if self.instances == 0 {
            1.0
        } else {
            self.agreements as f64 / self.instances as f64
        }
    }

    pub fn all_agree(&self) -> bool {
        self.agreements == self.instances
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub instance: AuditInstance,
    pub values: BTreeMap<String, RouteValue>,
    pub verdict: Verdict,
    pub discrepancies: Vec<Discrepancy>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orientations: Vec<OrientationSummary>,
}

impl AuditReport {
    fn new(instance: AuditInstance) -> Self {
        AuditReport {
            instance,
            values: BTreeMap::new(),
            verdict: Verdict::Agree,
            discrepancies: Vec::new(),
            orientations: Vec::new(),
        }
    }

    fn settle(mut self) -> Self {
        self.verdict = if self.discrepancies.is_empty() {
            Verdict::Agree
        } else {
            Verdict::Disagree
        };
        self
    }

    fn into_checked(self) -> Result<Self, AuditError> {
        let report = self.settle();
        match report.verdict {
            Verdict::Agree => Ok(report),
            Verdict::Disagree => Err(AuditError::ToleranceViolation(Box::new(report))),
        }
    }

    pub fn agrees(&self) -> bool {
        self.verdict == Verdict::Agree
    }

    pub fn orientation(&self, form: OrientationForm) -> Option<&OrientationSummary> {
        self.orientations.iter().find(|s| s.form == form)
    }
}

/// `f̂(b) = (1/n)·Σ_{m=1}^{n} f(m)·e(−bm/n)`; index `r` holds residue `r`.
pub fn fourier_transform(f: &[Complex64]) -> Vec<Complex64> {
    let n = f.len() as u64;
    (0..n)
        .map(|b| {
            let s: Complex64 = (1..=n)
                .map(|m| f[(m % n) as usize] * unit_root(-((b * m % n) as i128), n))
                .sum();
            s / n as f64
        })
        .collect()
}

/// `f(m) = Σ_{b=1}^{n} f̂(b)·e(bm/n)`.
pub fn inverse_fourier_transform(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() as u64;
    (0..n)
        .map(|m| {
            (1..=n)
                .map(|b| coeffs[(b % n) as usize] * unit_root((b * m % n) as i128, n))
                .sum()
        })
        .collect()
}

/// Largest pointwise error of `inverse(forward(f))` and where it occurs.
pub fn fourier_round_trip_error(f: &[i64]) -> (f64, usize) {
    let input: Vec<Complex64> = f.iter().map(|&v| Complex64::new(v as f64, 0.0)).collect();
    let back = inverse_fourier_transform(&fourier_transform(&input));
    back.iter()
        .zip(&input)
        .map(|(a, b)| (a - b).norm())
        .enumerate()
        .fold((0.0, 0), |(worst, at), (i, e)| if e > worst { (e, i) } else { (worst, at) })
}

/// Round-trip check for one explicit periodic function.
pub fn check_fourier_function(f: &[i64]) -> Result<AuditReport, AuditError> {
    let n = f.len() as u64;
    if n == 0 || n > FOURIER_MAX_MODULUS {
        return Err(AuditError::Precondition(format!(
            "fourier check needs 1 ≤ n ≤ {FOURIER_MAX_MODULUS}, got {n}"
        )));
    }
    let mut report = AuditReport::new(AuditInstance::FourierPair {
        n,
        samples: 1,
        seed: None,
    });
    let (err, at) = fourier_round_trip_error(f);
    report.values.insert("max_abs_error".into(), RouteValue::Float(err));
    if err > FOURIER_TOLERANCE {
        report.discrepancies.push(Discrepancy {
            route: "inverse_of_forward".into(),
            value: RouteValue::Float(err),
            detail: format!("n={n} residue {at}: error {err:e}"),
        });
    }
    report.into_checked()
}

fn random_function(rng: &mut ChaCha8Rng, n: u64) -> Vec<i64> {
    (0..n)
        .map(|_| rng.random_range(-RANDOM_VALUE_RANGE..=RANDOM_VALUE_RANGE))
        .collect()
}

/// Round-trips `samples` random integer-valued functions of period `n`.
pub fn check_fourier_pair(n: u64, samples: u64, seed: u64) -> Result<AuditReport, AuditError> {
    if n == 0 || n > FOURIER_MAX_MODULUS {
        return Err(AuditError::Precondition(format!(
            "fourier check needs 1 ≤ n ≤ {FOURIER_MAX_MODULUS}, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AuditReport::new(AuditInstance::FourierPair {
        n,
        samples,
        seed: Some(seed),
    });
    let mut worst = (0.0f64, 0u64, 0usize);
    for sample in 0..samples {
        let f = random_function(&mut rng, n);
        let (err, at) = fourier_round_trip_error(&f);
        if err > worst.0 {
            worst = (err, sample, at);
        }
    }
    report.values.insert("max_abs_error".into(), RouteValue::Float(worst.0));
    if worst.0 > FOURIER_TOLERANCE {
        report.discrepancies.push(Discrepancy {
            route: "inverse_of_forward".into(),
            value: RouteValue::Float(worst.0),
            detail: format!(
                "n={n} sample {} residue {}: error {:e}",
                worst.1, worst.2, worst.0
            ),
        });
    }
    report.into_checked()
}

/// Fourier round trips for every modulus `1..=n_max`, aggregated.
pub fn check_fourier_grid(n_max: u64, samples: u64, seed: u64) -> Result<AuditReport, AuditError> {
    let mut report = AuditReport::new(AuditInstance::FourierGrid { n_max, samples, seed });
    let mut worst = 0.0f64;
    for n in 1..=n_max {
        match check_fourier_pair(n, samples, seed.wrapping_add(n)) {
            Ok(r) => {
                if let Some(RouteValue::Float(e)) = r.values.get("max_abs_error") {
                    worst = worst.max(*e);
                }
            }
            Err(AuditError::ToleranceViolation(r)) => {
                report.discrepancies.extend(r.discrepancies);
            }
            Err(e) => return Err(e),
        }
    }
    report.values.insert("max_abs_error".into(), RouteValue::Float(worst));
    report.into_checked()
}

fn exact_class_product(profile: &ConstraintProfile, m: i128) -> BigInt {
    let n = profile.n();
    let mut acc = BigInt::one();
    for (&d, &k) in profile.kappa() {
        let c = ramanujan::class_exponential_sum(n, d, m).expect("profile keys divide n");
        acc *= Pow::pow(BigInt::from(c), k);
    }
    acc
}

fn check_product_with_spectrum(
    profile: &ConstraintProfile,
    counts: &[BigUint],
    m: i64,
) -> AuditReport {
    let n = profile.n();
    let mut report = AuditReport::new(AuditInstance::ProductIdentity {
        n,
        kappa: profile.kappa().clone(),
        m,
    });
    let lhs: Complex64 = (1..=n)
        .map(|b| {
            let weight = counts[(b % n) as usize].to_f64().unwrap_or(f64::INFINITY);
            unit_root((b as i128 * m as i128).rem_euclid(n as i128), n) * weight
        })
        .sum();
    let rhs = exact_class_product(profile, m as i128);
    let rhs_f = rhs.to_f64().unwrap_or(f64::INFINITY);
    let err = (lhs - Complex64::new(rhs_f, 0.0)).norm();
    let tol = PRODUCT_TOLERANCE * (rhs_f.abs() + 1.0);
    report.values.insert("lhs_fourier_sum".into(), lhs.into());
    report.values.insert("rhs_class_product".into(), RouteValue::Exact(rhs));
    if err.is_nan() || err > tol {
        report.discrepancies.push(Discrepancy {
            route: "lhs_fourier_sum".into(),
            value: lhs.into(),
            detail: format!("{profile} m={m}: |lhs - rhs| = {err:e} > {tol:e}"),
        });
    }
    report.settle()
}

fn product_preconditions(profile: &ConstraintProfile) -> Result<(), AuditError> {
    if profile.n() > PRODUCT_MAX_MODULUS {
        return Err(AuditError::Precondition(format!(
            "product identity check needs n ≤ {PRODUCT_MAX_MODULUS}, got {}",
            profile.n()
        )));
    }
    let total = total_solutions(profile);
    if total > BigUint::from(PRODUCT_MAX_TOTAL) {
        return Err(AuditError::Precondition(format!(
            "product identity check needs at most {PRODUCT_MAX_TOTAL} tuples, profile has {total}"
        )));
    }
    Ok(())
}

/// Compares `Σ_{b=1}^{n} N(b)·e(bm/n)` (oracle spectrum) with the exact
/// product of class exponential sums.
pub fn check_product_identity(profile: &ConstraintProfile, m: i64) -> Result<AuditReport, AuditError> {
    product_preconditions(profile)?;
    let spectrum = oracle::convolution_spectrum(profile)?;
    check_product_with_spectrum(profile, spectrum.counts(), m).into_checked()
}

/// Calls `visit` with every κ over `divisors` having `Σκ ≤ k_max`, in
/// lexicographic order of the multiplicity vector.
pub fn for_each_profile(n: u64, k_max: u64, mut visit: impl FnMut(ConstraintProfile)) {
    let divisors = arith::divisors(n).expect("n ≥ 1");
    let divs = divisors.as_slice();
    let mut kappa = vec![0u64; divs.len()];
    fn rec(
        i: usize,
        left: u64,
        n: u64,
        divs: &[u64],
        kappa: &mut Vec<u64>,
        visit: &mut dyn FnMut(ConstraintProfile),
    ) {
        if i == divs.len() {
            let p = ConstraintProfile::new(n, divs.iter().copied().zip(kappa.iter().copied()))
                .expect("divisors of n");
            visit(p);
            return;
        }
        for k in 0..=left {
            kappa[i] = k;
            rec(i + 1, left - k, n, divs, kappa, visit);
        }
        kappa[i] = 0;
    }
    rec(0, k_max, n, divs, &mut kappa, &mut visit);
}

/// Product identity for every profile with `n ≤ n_max`, `Σκ ≤ k_max` and
/// every `m ∈ {0, …, n}`.
pub fn check_product_grid(n_max: u64, k_max: u64) -> Result<AuditReport, AuditError> {
    let mut report = AuditReport::new(AuditInstance::ProductGrid { n_max, k_max });
    let mut checked = 0u64;
    let mut failure = None;
    for n in 1..=n_max {
        for_each_profile(n, k_max, |p| {
            if failure.is_some() {
                return;
            }
            if let Err(e) = product_preconditions(&p) {
                failure = Some(e);
                return;
            }
            let spectrum = match oracle::convolution_spectrum(&p) {
                Ok(s) => s,
                Err(e) => {
                    failure = Some(e.into());
                    return;
                }
            };
            for m in 0..=n as i64 {
                let r = check_product_with_spectrum(&p, spectrum.counts(), m);
                checked += 1;
                report.discrepancies.extend(r.discrepancies);
            }
        });
    }
    if let Some(e) = failure {
        return Err(e);
    }
    report
        .values
        .insert("instances".into(), RouteValue::Exact(BigInt::from(checked)));
    report.into_checked()
}

/// Evaluates one reading of the closed form's divisor sum (before dividing
/// by n) using exact Ramanujan sums.
pub fn orientation_divisor_sum(
    form: OrientationForm,
    profile: &ConstraintProfile,
    b: i128,
) -> BigInt {
    let n = profile.n();
    let f = arith::factorize(n).expect("n ≥ 1");
    let table = DivisorRamanujan::new(&f);
    let weights = class_weights(&table, profile);
    form_sum(form, &table, &weights, n, b)
}

fn class_weights(table: &DivisorRamanujan, profile: &ConstraintProfile) -> Vec<BigInt> {
    let n = profile.n();
    table
        .divisors()
        .iter()
        .map(|d| {
            profile
                .kappa()
                .iter()
                .map(|(&class, &k)| {
                    let c = table.eval(n / class, d as i128).expect("n/D divides n");
                    Pow::pow(BigInt::from(c), k)
                })
                .product()
        })
        .collect()
}

fn form_sum(
    form: OrientationForm,
    table: &DivisorRamanujan,
    weights: &[BigInt],
    n: u64,
    b: i128,
) -> BigInt {
    let mut acc = BigInt::zero();
    for (d, w) in table.divisors().iter().zip(weights) {
        let modulus = match form {
            OrientationForm::DerivationConsistent => n / d,
            OrientationForm::Printed => d,
        };
        let c = table.eval(modulus, b).expect("modulus divides n");
        acc += w * c;
    }
    acc
}

/// Measures both readings of the closed form against the convolution oracle
/// on every profile with `n ≤ n_max`, `Σκ ≤ k_max`, and every residue `b`.
/// A disagreeing form is a finding recorded in the report, not an error.
pub fn adjudicate_orientations(n_max: u64, k_max: u64) -> Result<AuditReport, AuditError> {
    if n_max > ADJUDICATION_MAX_MODULUS || k_max > ADJUDICATION_MAX_K {
        return Err(AuditError::Precondition(format!(
            "adjudication limited to n_max ≤ {ADJUDICATION_MAX_MODULUS}, k_max ≤ {ADJUDICATION_MAX_K}"
        )));
    }
    let mut report = AuditReport::new(AuditInstance::Orientation { n_max, k_max });
    let mut summaries: Vec<OrientationSummary> = OrientationForm::ALL
        .iter()
        .map(|&f| OrientationSummary::new(f))
        .collect();
    let mut failure = None;
    for n in 1..=n_max {
        let table = DivisorRamanujan::new(&arith::factorize(n).expect("n ≥ 1"));
        for_each_profile(n, k_max, |p| {
            if failure.is_some() {
                return;
            }
            let spectrum = match oracle::convolution_spectrum(&p) {
                Ok(s) => s,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            };
            let weights = class_weights(&table, &p);
            for b in 0..n {
                let truth = &spectrum.counts()[b as usize];
                for summary in summaries.iter_mut() {
                    let sum = form_sum(summary.form, &table, &weights, n, b as i128);
                    summary.instances += 1;
                    let value = exact_quotient(&sum, n);
                    if value.is_none() {
                        let (_, r) = num_integer::Integer::div_rem(&sum, &BigInt::from(n));
                        if !r.is_zero() {
                            summary.non_integral += 1;
                        } else {
                            summary.negative += 1;
                        }
                    }
                    if value.as_ref() == Some(truth) {
                        summary.agreements += 1;
                    } else if summary.first_counterexample.is_none() {
                        summary.first_counterexample = Some(Counterexample {
                            profile: p.clone(),
                            b,
                            oracle: truth.clone(),
                            divisor_sum: sum,
                        });
                    }
                }
            }
        });
    }
    if let Some(e) = failure {
        return Err(e.into());
    }
    let instances = summaries[0].instances;
    report
        .values
        .insert("instances".into(), RouteValue::Exact(BigInt::from(instances)));
    for s in &summaries {
        report.values.insert(
            format!("{}.agreement_rate", s.form.route_name()),
            RouteValue::Float(s.agreement_rate()),
        );
        if let Some(cx) = &s.first_counterexample {
            report.discrepancies.push(Discrepancy {
                route: s.form.route_name().into(),
                value: RouteValue::Exact(cx.divisor_sum.clone()),
                detail: format!(
                    "{} b={}: divisor sum {} over n={} vs oracle {}",
                    cx.profile,
                    cx.b,
                    cx.divisor_sum,
                    cx.profile.n(),
                    cx.oracle
                ),
            });
        }
    }
    report.orientations = summaries;
    Ok(report.settle())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(n: u64, kappa: &[(u64, u64)]) -> ConstraintProfile {
        ConstraintProfile::new(n, kappa.iter().copied()).unwrap()
    }

    #[test]
    fn fourier_examples() {
        assert!(check_fourier_function(&[7]).unwrap().agrees());
        let mut delta = vec![0i64; 8];
        delta[3] = 1;
        assert!(check_fourier_function(&delta).unwrap().agrees());
        let r = check_fourier_pair(12, 20, 7).unwrap();
        assert!(r.agrees());
        assert!(matches!(
            check_fourier_pair(FOURIER_MAX_MODULUS + 1, 1, 0),
            Err(AuditError::Precondition(_))
        ));
    }

    #[test]
    fn fourier_coefficients_of_delta() {
        // f = δ_3 on Z/8: f̂(b) = e(−3b/8)/8
        let mut f = vec![Complex64::zero(); 8];
        f[3] = Complex64::one();
        let coeffs = fourier_transform(&f);
        for (b, c) in coeffs.iter().enumerate() {
            let expected = unit_root(-(3 * b as i128), 8) / 8.0;
            assert!((c - expected).norm() < 1e-12);
        }
    }

    #[test]
    fn product_identity_examples() {
        let r = check_product_identity(&profile(4, &[(1, 2)]), 1).unwrap();
        assert_eq!(r.values["rhs_class_product"], RouteValue::Exact(BigInt::zero()));
        let r = check_product_identity(&profile(4, &[(1, 2)]), 4).unwrap();
        assert_eq!(r.values["rhs_class_product"], RouteValue::Exact(BigInt::from(4)));
        match &r.values["lhs_fourier_sum"] {
            RouteValue::Complex { re, im } => assert!((re - 4.0).abs() < 1e-9 && im.abs() < 1e-9),
            other => panic!("unexpected {other:?}"),
        }
        let r = check_product_identity(&profile(1, &[(1, 3)]), 1).unwrap();
        assert_eq!(r.values["rhs_class_product"], RouteValue::Exact(BigInt::one()));
    }

    #[test]
    fn product_identity_detects_a_wrong_spectrum() {
        let p = profile(4, &[(1, 2)]);
        let wrong: Vec<BigUint> = [2u8, 1, 2, 0].iter().map(|&v| BigUint::from(v)).collect();
        let r = check_product_with_spectrum(&p, &wrong, 1);
        assert_eq!(r.verdict, Verdict::Disagree);
        assert_eq!(r.discrepancies.len(), 1);
    }

    #[test]
    fn product_identity_preconditions() {
        assert!(matches!(
            check_product_identity(&profile(210, &[(1, 1)]), 0),
            Err(AuditError::Precondition(_))
        ));
        assert!(matches!(
            check_product_identity(&profile(101, &[(1, 4)]), 0),
            Err(AuditError::Precondition(_))
        ));
    }

    #[test]
    fn orientation_examples() {
        use OrientationForm::*;
        let a = |n, k: &[(u64, u64)], b| orientation_divisor_sum(DerivationConsistent, &profile(n, k), b);
        assert_eq!(a(4, &[(1, 2)], 0), BigInt::from(8));
        assert_eq!(a(4, &[(1, 1)], 1), BigInt::from(4));
        for k in 0..4 {
            for b in -2..3 {
                assert_eq!(a(1, &[(1, k)], b), BigInt::one());
                assert_eq!(orientation_divisor_sum(Printed, &profile(1, &[(1, k)]), b), BigInt::one());
            }
        }
    }

    #[test]
    fn profile_enumeration_counts_multisets() {
        // τ(12) = 6 divisors, Σκ ≤ 2: C(6+2, 2) = 28 profiles
        let mut seen = 0;
        for_each_profile(12, 2, |p| {
            assert!(p.k() <= 2);
            seen += 1;
        });
        assert_eq!(seen, 28);
    }

    #[test]
    fn small_adjudication() {
        let r = adjudicate_orientations(12, 2).unwrap();
        let a = r.orientation(OrientationForm::DerivationConsistent).unwrap();
        assert!(a.all_agree());
        assert_eq!(a.non_integral, 0);
        let b = r.orientation(OrientationForm::Printed).unwrap();
        assert!(!b.all_agree());
        assert!(b.first_counterexample.is_some());
        assert_eq!(r.verdict, Verdict::Disagree);
        assert!(matches!(
            adjudicate_orientations(49, 1),
            Err(AuditError::Precondition(_))
        ));
    }

    #[test]
    fn report_json_round_trip() {
        let reports = [
            adjudicate_orientations(6, 2).unwrap(),
            check_product_identity(&profile(6, &[(1, 1), (2, 1)]), 5).unwrap(),
            check_fourier_pair(5, 2, 1).unwrap(),
            check_product_grid(4, 1).unwrap(),
        ];
        for r in reports {
            let text = serde_json::to_string(&r).unwrap();
            let back: AuditReport = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
        }
    }
}
