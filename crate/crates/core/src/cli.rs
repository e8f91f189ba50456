//! Command-line front end for the `rlc` binary.
//!
//! Plain output is the bare value so the tool composes with shell pipelines;
//! structured output sits behind `--json`. Exit status is 0 on success, 1 on
//! bad input and 2 when an internal invariant fails.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::audit::{self, AuditError, AuditReport, OrientationForm};
use crate::counting::{self, ConstraintProfile, CountError, Method, SolutionCount};
use crate::oracle::{self, OracleError, DEFAULT_ENUMERATION_BUDGET};
use crate::ramanujan::{self, RamanujanError, RamanujanQuery};
use crate::serde_decimal;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rlc",
    version,
    about = "Count solutions of x1+...+xk ≡ b (mod n) with gcd-class constraints"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count solutions for one residue b.
    Count(CountArgs),
    /// Counts for every residue b = 0..n-1, one per line.
    Spectrum(SpectrumArgs),
    /// Evaluate the Ramanujan sum c_q(m).
    Ramanujan(RamanujanArgs),
    /// Fourier round trips, product identity and closed-form orientation check.
    Audit(AuditArgs),
    /// Time the formula against the convolution and enumeration oracles.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Constraint {
    /// Multiplicities per gcd class, `d:k[,d:k...]`.
    #[arg(long)]
    pub kappa: Option<String>,
    /// One gcd per variable, `t1,t2,...`.
    #[arg(long)]
    pub gcds: Option<String>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: BigInt,
    #[command(flatten)]
    pub constraint: Constraint,
    #[arg(long, default_value = "formula")]
    pub method: Method,
    /// Tuple budget for `--method naive`.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub kappa: String,
    #[arg(long, default_value = "formula")]
    pub method: Method,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RamanujanMethod {
    Exact,
    Direct,
    DivisorSum,
}

#[derive(Debug, Args)]
pub struct RamanujanArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub m: BigInt,
    #[arg(long, value_enum, default_value = "exact")]
    pub method: RamanujanMethod,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, default_value_t = 24)]
    pub n_max: u64,
    #[arg(long, default_value_t = 3)]
    pub k_max: u64,
    /// Seed for the random periodic functions of the Fourier check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random functions per modulus in the Fourier check.
    #[arg(long, default_value_t = 20)]
    pub samples: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub kappa: String,
    #[arg(long, allow_negative_numbers = true, default_value = "0")]
    pub b: BigInt,
    #[arg(long, default_value_t = 5)]
    pub repeat: u32,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KappaError {
    #[error("malformed token `{0}` (expected d:k)")]
    Malformed(String),
    #[error("duplicate divisor in `{0}`")]
    Duplicate(String),
    #[error("`{token}`: {divisor} does not divide {n}")]
    NotADivisor { token: String, divisor: u64, n: u64 },
}

/// Parses `d:k(,d:k)*` into a divisor → multiplicity map for modulus `n`.
pub fn parse_kappa(text: &str, n: u64) -> Result<BTreeMap<u64, u64>, KappaError> {
    let mut out = BTreeMap::new();
    let text = text.trim();
    if text.is_empty() {
        return Ok(out);
    }
    for raw in text.split(',') {
        let token = raw.trim();
        let malformed = || KappaError::Malformed(token.to_string());
        let (d, k) = token.split_once(':').ok_or_else(malformed)?;
        let d: u64 = d.trim().parse().map_err(|_| malformed())?;
        let k: u64 = k.trim().parse().map_err(|_| malformed())?;
        if d == 0 {
            return Err(malformed());
        }
        if !n.is_multiple_of(d) {
            return Err(KappaError::NotADivisor {
                token: token.to_string(),
                divisor: d,
                n,
            });
        }
        if out.insert(d, k).is_some() {
            return Err(KappaError::Duplicate(token.to_string()));
        }
    }
    Ok(out)
}

/// Parses `t1,t2,...`; any positive integers are accepted.
pub fn parse_gcds(text: &str) -> Result<Vec<u64>, KappaError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|raw| {
            let token = raw.trim();
            match token.parse::<u64>() {
                Ok(t) if t > 0 => Ok(t),
                _ => Err(KappaError::Malformed(token.to_string())),
            }
        })
        .collect()
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            _ => EXIT_INTERNAL,
        }
    }
}

impl From<KappaError> for CliError {
    fn from(e: KappaError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Profile(c) => c.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<RamanujanError> for CliError {
    fn from(e: RamanujanError) -> Self {
        match e {
            RamanujanError::NonIntegral { .. } => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<AuditError> for CliError {
    fn from(e: AuditError) -> Self {
        match e {
            AuditError::Precondition(_) => CliError::Input(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: u64,
    pub b: u64,
    pub kappa: BTreeMap<u64, u64>,
    #[serde(with = "serde_decimal::biguint")]
    pub count: BigUint,
    pub method: Method,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: u64,
    pub kappa: BTreeMap<u64, u64>,
    #[serde(with = "serde_decimal::biguint_vec")]
    pub counts: Vec<BigUint>,
    pub method: Method,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RamanujanReport {
    pub q: u64,
    pub m: u64,
    #[serde(with = "serde_decimal::bigint")]
    pub value: BigInt,
    pub method: RamanujanMethod,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub passed: bool,
    pub reports: Vec<AuditReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRoute {
    pub method: Method,
    #[serde(with = "option_biguint")]
    pub count: Option<BigUint>,
    pub min_ms: Option<f64>,
    pub mean_ms: Option<f64>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub n: u64,
    pub b: u64,
    pub kappa: BTreeMap<u64, u64>,
    pub repeat: u32,
    pub routes: Vec<BenchRoute>,
    /// All routes that ran produced the same count.
    pub consistent: bool,
}

mod option_biguint {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|x| x.to_str_radix(10)).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(D::Error::custom))
            .transpose()
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn reduce_big(v: &BigInt, n: u64) -> u64 {
    v.mod_floor(&BigInt::from(n))
        .to_u64()
        .expect("residue below n fits in u64")
}

fn profile_from_kappa(n: u64, text: &str) -> Result<ConstraintProfile, CliError> {
    if n == 0 {
        return Err(CountError::ZeroModulus.into());
    }
    let kappa = parse_kappa(text, n)?;
    Ok(ConstraintProfile::new(n, kappa)?)
}

fn count_with(
    profile: &ConstraintProfile,
    b: i128,
    method: Method,
    budget: u64,
) -> Result<SolutionCount, CliError> {
    Ok(match method {
        Method::Formula => counting::count_solutions(profile, b)?,
        Method::Convolution => oracle::count_by_convolution(profile, b)?,
        Method::Naive => oracle::count_by_enumeration(profile, b, budget)?,
    })
}

fn run_count(args: &CountArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CountError::ZeroModulus.into());
    }
    let n = args.n;
    let b = reduce_big(&args.b, n);
    let (kappa, profile) = match (&args.constraint.kappa, &args.constraint.gcds) {
        (Some(text), _) => {
            let p = profile_from_kappa(n, text)?;
            (p.kappa().clone(), Some(p))
        }
        (None, Some(text)) => {
            let gcds = parse_gcds(text)?;
            let mut multiset = BTreeMap::new();
            for &t in &gcds {
                *multiset.entry(t).or_insert(0) += 1;
            }
            (multiset, ConstraintProfile::from_gcds(n, &gcds)?)
        }
        (None, None) => return Err(CliError::Input("one of --kappa or --gcds is required".into())),
    };
    let result = match &profile {
        Some(p) => count_with(p, b as i128, args.method, args.budget)?,
        // some t_i does not divide n: its class is empty
        None => SolutionCount {
            value: BigUint::default(),
            method: args.method,
            elapsed: Duration::ZERO,
        },
    };
    if args.verbose {
        writeln!(
            err,
            "n={n} b={b} k={} method={} elapsed_ms={:.3}",
            kappa.values().sum::<u64>(),
            result.method,
            millis(result.elapsed)
        )?;
    }
    if args.json {
        let report = CountReport {
            n,
            b,
            kappa,
            count: result.value,
            method: result.method,
            elapsed_ms: millis(result.elapsed),
        };
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "{}", result.value)?;
    }
    Ok(())
}

fn run_spectrum(args: &SpectrumArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let profile = profile_from_kappa(args.n, &args.kappa)?;
    let start = Instant::now();
    let spectrum = match args.method {
        Method::Formula => counting::spectrum(&profile)?,
        Method::Convolution => oracle::convolution_spectrum(&profile)?,
        Method::Naive => oracle::enumeration_spectrum(&profile, args.budget)?,
    };
    let elapsed = start.elapsed();
    if args.json {
        let report = SpectrumReport {
            n: args.n,
            kappa: profile.kappa().clone(),
            counts: spectrum.into_counts(),
            method: args.method,
            elapsed_ms: millis(elapsed),
        };
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        for c in spectrum.counts() {
            writeln!(out, "{c}")?;
        }
    }
    Ok(())
}

fn run_ramanujan(args: &RamanujanArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.q == 0 {
        return Err(RamanujanError::ZeroModulus.into());
    }
    let m = reduce_big(&args.m, args.q);
    let query = RamanujanQuery::new(args.q, m as i128);
    let value = match args.method {
        RamanujanMethod::Exact => ramanujan::ramanujan_exact(query)?,
        RamanujanMethod::Direct => ramanujan::ramanujan_direct(query)?,
        RamanujanMethod::DivisorSum => ramanujan::ramanujan_divisor_sum(query)?,
    };
    if args.json {
        let report = RamanujanReport {
            q: args.q,
            m,
            value: BigInt::from(value),
            method: args.method,
        };
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "{value}")?;
    }
    Ok(())
}

fn run_audit(args: &AuditArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let orientation = audit::adjudicate_orientations(args.n_max, args.k_max)?;
    let fourier = match audit::check_fourier_grid(args.n_max, args.samples, args.seed) {
        Ok(r) => r,
        Err(AuditError::ToleranceViolation(r)) => *r,
        Err(e) => return Err(e.into()),
    };
    let product = match audit::check_product_grid(args.n_max.min(24), args.k_max.min(3)) {
        Ok(r) => r,
        Err(AuditError::ToleranceViolation(r)) => *r,
        Err(e) => return Err(e.into()),
    };
    let consistent = orientation
        .orientation(OrientationForm::DerivationConsistent)
        .is_some_and(|s| s.all_agree());
    let passed = consistent && fourier.agrees() && product.agrees();
    if args.json {
        let summary = AuditSummary {
            passed,
            reports: vec![orientation, fourier, product],
        };
        writeln!(out, "{}", serde_json::to_string(&summary)?)?;
    } else {
        for s in &orientation.orientations {
            write!(
                out,
                "orientation {}: {}/{} agree ({:.4}%), non-integral {}, negative {}",
                s.form.route_name(),
                s.agreements,
                s.instances,
                100.0 * s.agreement_rate(),
                s.non_integral,
                s.negative
            )?;
            if let Some(cx) = &s.first_counterexample {
                write!(
                    out,
                    "; first counterexample {} b={}: divisor sum {} vs oracle {}",
                    cx.profile, cx.b, cx.divisor_sum, cx.oracle
                )?;
            }
            writeln!(out)?;
        }
        for (name, r) in [("fourier pair", &fourier), ("product identity", &product)] {
            writeln!(out, "{name}: {:?}", r.verdict)?;
            for d in &r.discrepancies {
                writeln!(out, "  {}", d.detail)?;
            }
        }
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Internal(
            "audit found a disagreement on the production path".into(),
        ))
    }
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let profile = profile_from_kappa(args.n, &args.kappa)?;
    let b = reduce_big(&args.b, args.n);
    let repeat = args.repeat.max(1);
    let mut routes = Vec::new();
    for method in Method::ALL {
        let mut times = Vec::new();
        let mut value = None;
        let mut skipped = None;
        for _ in 0..repeat {
            match count_with(&profile, b as i128, method, args.budget) {
                Ok(c) => {
                    times.push(millis(c.elapsed));
                    value = Some(c.value);
                }
                Err(CliError::Input(reason)) => {
                    skipped = Some(reason);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let (min_ms, mean_ms) = if times.is_empty() {
            (None, None)
        } else {
            let min = times.iter().copied().fold(f64::INFINITY, f64::min);
            (Some(min), Some(times.iter().sum::<f64>() / times.len() as f64))
        };
        routes.push(BenchRoute {
            method,
            count: value,
            min_ms,
            mean_ms,
            skipped,
        });
    }
    let mut counts = routes.iter().filter_map(|r| r.count.as_ref());
    let first = counts.next();
    let consistent = counts.all(|c| Some(c) == first);
    let report = BenchReport {
        n: args.n,
        b,
        kappa: profile.kappa().clone(),
        repeat,
        routes,
        consistent,
    };
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        for r in &report.routes {
            match (&r.count, r.min_ms, r.mean_ms) {
                (Some(c), Some(min), Some(mean)) => writeln!(
                    out,
                    "{:<12} min {:>12.3} ms  mean {:>12.3} ms  count {}",
                    r.method.as_str(),
                    min,
                    mean,
                    c
                )?,
                _ => writeln!(
                    out,
                    "{:<12} skipped: {}",
                    r.method.as_str(),
                    r.skipped.as_deref().unwrap_or("no result")
                )?,
            }
        }
    }
    if !report.consistent {
        return Err(CliError::Internal("counting routes disagree".into()));
    }
    Ok(())
}

/// Executes a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Count(a) => run_count(a, out, err),
        Command::Spectrum(a) => run_spectrum(a, out),
        Command::Ramanujan(a) => run_ramanujan(a, out),
        Command::Audit(a) => run_audit(a, out),
        Command::Bench(a) => run_bench(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INPUT
                }
            }
        }
    }
}
