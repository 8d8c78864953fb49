//! Random ("homogeneous society") thresholds: every vertex draws an i.i.d.
//! threshold from a fixed distribution on {a, …, b}. This module samples
//! assignments, evaluates the concentration tail bound on the probability
//! that a small seed set is a dynamo, and estimates that probability by
//! Monte Carlo.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, ThresholdAssignment, VertexSet};
use crate::numeric::{scalar, tail_exponent, Scalar};
use crate::resistant::DynamoDecider;

/// Threshold distribution on the integer support {a, …, b} with
/// probabilities p_a, …, p_b. Generic over the probability scalar: exact
/// rationals for the normative lane, f64 for quick experiments.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdModel<T> {
    a: usize,
    b: usize,
    p: Vec<T>,
}

impl<T: Scalar> ThresholdModel<T> {
    /// Validates 1 ≤ a ≤ b, nonnegative probabilities and a total within
    /// 1e-12 of 1, then renormalizes the total to exactly 1.
    pub fn new(a: usize, b: usize, p: Vec<T>) -> Result<ThresholdModel<T>> {
        if a < 1 || a > b {
            return Err(Error::InvalidModel(format!(
                "support must satisfy 1 <= a <= b, got [{a}, {b}]"
            )));
        }
        if p.len() != b - a + 1 {
            return Err(Error::InvalidModel(format!(
                "support [{a}, {b}] needs {} probabilities, got {}",
                b - a + 1,
                p.len()
            )));
        }
        if p.iter().any(|x| x < &T::zero()) {
            return Err(Error::InvalidModel("negative probability".into()));
        }
        let sum = p.iter().fold(T::zero(), |acc, x| acc + x.clone());
        let total = sum.to_f64().unwrap_or(f64::NAN);
        let within_tolerance = (total - 1.0).abs() <= 1e-12;
        if !within_tolerance {
            return Err(Error::InvalidModel(format!(
                "probabilities sum to {total}, expected 1"
            )));
        }
        let p = p.into_iter().map(|x| x / sum.clone()).collect();
        Ok(ThresholdModel { a, b, p })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn probabilities(&self) -> &[T] {
        &self.p
    }

    /// First moment α = Σ i·p_i.
    pub fn alpha(&self) -> T {
        self.p
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, p)| acc + scalar::<T>(self.a + i) * p.clone())
    }

    /// Second moment β = Σ i²·p_i.
    pub fn beta(&self) -> T {
        self.p.iter().enumerate().fold(T::zero(), |acc, (i, p)| {
            let i = scalar::<T>(self.a + i);
            acc + i.clone() * i * p.clone()
        })
    }

    fn cumulative_f64(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.p
            .iter()
            .map(|p| {
                acc += p.to_f64().unwrap_or(0.0);
                acc
            })
            .collect()
    }
}

/// Parses one probability token: a rational like `3/10` or a decimal like
/// `0.3`, both carried exactly.
pub fn parse_probability(token: &str) -> Result<crate::Rational> {
    let bad = |msg: String| Error::InvalidModel(msg);
    let token = token.trim();
    if let Some((num, den)) = token.split_once('/') {
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad numerator in `{token}`")))?;
        let den: i64 = den
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad denominator in `{token}`")))?;
        if den == 0 {
            return Err(bad(format!("zero denominator in `{token}`")));
        }
        return Ok(crate::Rational::new(num, den));
    }
    let (int_part, frac_part) = token.split_once('.').unwrap_or((token, ""));
    let int_part = if int_part.is_empty() { "0" } else { int_part };
    let int: i64 = int_part
        .parse()
        .map_err(|_| bad(format!("bad probability `{token}`")))?;
    if frac_part.is_empty() {
        return Ok(crate::Rational::from_integer(int));
    }
    if frac_part.len() > 15 || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(format!("bad probability `{token}`")));
    }
    let frac: i64 = frac_part.parse().unwrap();
    let den = 10i64.pow(frac_part.len() as u32);
    Ok(crate::Rational::from_integer(int) + crate::Rational::new(frac, den))
}

impl ThresholdModel<crate::Rational> {
    /// Model from textual probabilities (decimals or rationals), kept exact.
    pub fn from_strings(a: usize, tokens: &[&str]) -> Result<Self> {
        let p = tokens
            .iter()
            .map(|t| parse_probability(t))
            .collect::<Result<Vec<_>>>()?;
        let b = a + p.len().saturating_sub(1);
        ThresholdModel::new(a, b, p)
    }
}

fn sample_with_rng<T: Scalar>(
    g: &Graph,
    model: &ThresholdModel<T>,
    cumulative: &[f64],
    rng: &mut ChaCha8Rng,
) -> ThresholdAssignment {
    let t: Vec<usize> = (0..g.n())
        .map(|_| {
            let u: f64 = rng.gen();
            let idx = cumulative
                .partition_point(|&c| c <= u)
                .min(cumulative.len() - 1);
            model.a + idx
        })
        .collect();
    ThresholdAssignment::from_vec(t).expect("a >= 1 keeps thresholds positive")
}

/// Draws i.i.d. per-vertex thresholds from the model. Deterministic in the
/// seed within this implementation.
pub fn sample_thresholds<T: Scalar>(
    g: &Graph,
    model: &ThresholdModel<T>,
    seed: u64,
) -> ThresholdAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with_rng(g, model, &model.cumulative_f64(), &mut rng)
}

/// Tail bound on P(D is a dynamo) for a seed of size k in a graph with n
/// vertices and m edges under random thresholds: the threshold sum over
/// H = V∖D concentrates around α(n−k), and a dynamo forces it below m.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "T: Serialize")]
pub struct TailBoundReport<T> {
    /// E[X] = α(n−k), the expected threshold sum over H.
    pub expected_sum: T,
    /// λ = α(n−k) − m; the bound needs λ > 0.
    pub lambda: T,
    pub applicable: bool,
    /// exp(−λ²/(2(n−k)β)) when applicable.
    pub bound: Option<f64>,
    /// min(1, C(n,k)·bound): union bound over all seeds of size k.
    pub existence_bound: Option<f64>,
    pub expected_sum_approx: f64,
    pub lambda_approx: f64,
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let kk = k.min(n - k);
    let mut c = BigUint::one();
    for i in 1..=kk {
        // exact at every step: Π_{j≤i} (n−kk+j)/j is an integer
        c = c * BigUint::from(n - kk + i) / BigUint::from(i);
    }
    c
}

/// Evaluates the tail bound for seed size k on (n, m) under `model`.
/// Inapplicable (no bound) when λ ≤ 0; errors when k ≥ n.
pub fn dynamo_probability_bound<T: Scalar>(
    n: usize,
    k: usize,
    m: usize,
    model: &ThresholdModel<T>,
) -> Result<TailBoundReport<T>> {
    if k >= n {
        return Err(Error::InvalidParameter(format!(
            "seed size k={k} must be smaller than n={n}"
        )));
    }
    let alpha = model.alpha();
    let expected_sum = alpha * scalar::<T>(n - k);
    let lambda = expected_sum.clone() - scalar::<T>(m);
    let applicable = lambda > T::zero();
    let (bound, existence_bound) = if applicable {
        let exponent = tail_exponent(lambda.clone(), n - k, model.beta())
            .to_f64()
            .unwrap_or(f64::INFINITY);
        let bound = (-exponent).exp();
        let count = binomial(n, k).to_f64().unwrap_or(f64::INFINITY);
        (Some(bound), Some((count * bound).min(1.0)))
    } else {
        (None, None)
    };
    Ok(TailBoundReport {
        expected_sum_approx: expected_sum.to_f64().unwrap_or(f64::NAN),
        lambda_approx: lambda.to_f64().unwrap_or(f64::NAN),
        expected_sum,
        lambda,
        applicable,
        bound,
        existence_bound,
    })
}

/// Monte-Carlo estimate of P(D is a dynamo) over threshold draws.
#[derive(Debug, Clone, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub successes: u64,
    pub trials: u64,
}

/// Estimates the probability that `d` is a dynamo of g under model-drawn
/// thresholds, using the peeling decider per trial. Trial i draws from an
/// independent, seed-derived stream, so the estimate does not depend on
/// the worker count.
pub fn monte_carlo_dynamo_probability<T: Scalar + Sync>(
    g: &Graph,
    model: &ThresholdModel<T>,
    d: &VertexSet,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    d.check_graph(g)?;
    let cumulative = model.cumulative_f64();

    let run_range = |lo: u64, hi: u64| -> u64 {
        let base = ThresholdAssignment::constant(g.n(), model.a).expect("a >= 1");
        let mut decider = DynamoDecider::new(g, &base).expect("matching sizes");
        let mut successes = 0;
        for trial in lo..hi {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let t = sample_with_rng(g, model, &cumulative, &mut rng);
            decider.set_thresholds(&t).expect("matching sizes");
            if decider.seed_is_dynamo(d.as_slice()) {
                successes += 1;
            }
        }
        successes
    };

    let jobs = jobs.max(1).min(trials as usize).max(1);
    let successes = if jobs == 1 {
        run_range(0, trials)
    } else {
        let chunk = trials.div_ceil(jobs as u64);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs as u64)
                .map(|w| {
                    let run = &run_range;
                    let lo = w * chunk;
                    let hi = ((w + 1) * chunk).min(trials);
                    scope.spawn(move || if lo < hi { run(lo, hi) } else { 0 })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).sum()
        })
    };

    let estimate = successes as f64 / trials as f64;
    let stderr = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    Ok(McEstimate {
        estimate,
        stderr,
        successes,
        trials,
    })
}
