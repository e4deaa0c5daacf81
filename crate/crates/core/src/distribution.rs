//! The Poisson-binomial law carried by the unsigned first-kind rows.
//!
//! For fixed `n` and integer `r >= 0`, `P(Y = k)` is proportional to
//! `|u_r(n,k)|`. Since `sum_k |u_r(n,k)| s^k = prod_{i<n} (s + r + i^2)`, `Y`
//! is a sum of independent Bernoulli trials with success probabilities
//! `p_i = 1/(1 + r + i^2)`. Everything here is exact; the only floating
//! point lives in [`Histogram::deviation_report`].

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{BigRat, PolyR};
use crate::triangles::{Kind, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistError {
    #[error("the distribution needs at least one trial (n >= 1)")]
    NoTrials,
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error("entry {index} is not positive: {value}")]
    NonPositive { index: usize, value: BigInt },
    #[error("Newton's inequality needs n >= 2, got {0}")]
    RowTooShort(usize),
    #[error("success probability {0} does not fit the sampler's 64-bit draw")]
    ProbabilityTooFine(String),
}

/// Exact Poisson-binomial distribution of `Y_n` at parameter `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PBDist {
    n: usize,
    r: u64,
    probs: Vec<BigRat>,
    pmf: Vec<BigRat>,
    mean: BigRat,
    variance: BigRat,
}

/// `|u_r(n,k)|` for `k = 0..=n` at integer `r`.
pub fn unsigned_row(n: usize, r: u64) -> Vec<BigInt> {
    let table = Triangle::build_with(Kind::FirstKindR, n, &PolyR::constant(r));
    (0..=n)
        .map(|k| table.unsigned(n, k).eval(&BigInt::zero()))
        .collect()
}

/// Builds the distribution from the unsigned first-kind row.
pub fn build_dist(n: usize, r: u64) -> Result<PBDist, DistError> {
    if n == 0 {
        return Err(DistError::NoTrials);
    }
    let denoms: Vec<BigInt> = (0..n).map(|i| BigInt::from(r) + 1 + i * i).collect();
    let normalizer: BigInt = denoms.iter().product();
    let pmf = unsigned_row(n, r)
        .into_iter()
        .map(|c| BigRat::new(c, normalizer.clone()))
        .collect();
    let probs: Vec<BigRat> = denoms
        .into_iter()
        .map(|d| BigRat::new(BigInt::one(), d))
        .collect();
    let mean = probs.iter().sum();
    let variance = probs.iter().map(|p| p * (BigRat::one() - p)).sum();
    Ok(PBDist {
        n,
        r,
        probs,
        pmf,
        mean,
        variance,
    })
}

impl PBDist {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Success probabilities `p_0, ..., p_{n-1}`.
    pub fn probs(&self) -> &[BigRat] {
        &self.probs
    }

    pub fn pmf(&self) -> &[BigRat] {
        &self.pmf
    }

    /// Closed-form mean `sum p_i`.
    pub fn mean(&self) -> &BigRat {
        &self.mean
    }

    /// Closed-form variance `sum p_i (1 - p_i)`.
    pub fn variance(&self) -> &BigRat {
        &self.variance
    }

    pub fn total_mass(&self) -> BigRat {
        self.pmf.iter().sum()
    }

    /// Draws `count` outcomes of `sum_i X_i`, `X_i ~ Bernoulli(p_i)`.
    ///
    /// Each trial compares a uniform integer in `[0, q)` against `p` for
    /// `p_i = p/q`, so the per-trial law is exact. The generator is ChaCha8
    /// seeded from `seed`; equal arguments give equal histograms.
    pub fn sample(&self, count: u64, seed: u64) -> Result<Histogram, DistError> {
        if count == 0 {
            return Err(DistError::NoSamples);
        }
        let thresholds = self
            .probs
            .iter()
            .map(|p| match (p.numer().to_u64(), p.denom().to_u64()) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(DistError::ProbabilityTooFine(
                    crate::algebra::format_rational(p),
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = vec![0u64; self.n + 1];
        for _ in 0..count {
            let successes = thresholds
                .iter()
                .filter(|&&(num, den)| rng.gen_range(0..den) < num)
                .count();
            counts[successes] += 1;
        }
        Ok(Histogram {
            counts,
            total: count,
        })
    }
}

/// `(mean, variance)` computed directly from the pmf.
pub fn moments_from_pmf(d: &PBDist) -> (BigRat, BigRat) {
    let mut first = BigRat::zero();
    let mut second = BigRat::zero();
    for (k, p) in d.pmf.iter().enumerate() {
        let k = BigRat::from_integer(BigInt::from(k));
        first += &k * p;
        second += &k * &k * p;
    }
    let variance = second - &first * &first;
    (first, variance)
}

/// Coefficients in `s` of `prod_i (1 - p_i + p_i s)`.
pub fn pgf_product(probs: &[BigRat]) -> Vec<BigRat> {
    let mut coeffs = vec![BigRat::one()];
    for p in probs {
        let q = BigRat::one() - p;
        let mut next = vec![BigRat::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d] += &q * c;
            next[d + 1] += p * c;
        }
        coeffs = next;
    }
    coeffs
}

/// Outcome counts over `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn empirical_mean(&self) -> BigRat {
        let weighted: BigInt = self
            .counts
            .iter()
            .enumerate()
            .map(|(k, &c)| BigInt::from(k) * c)
            .sum();
        BigRat::new(weighted, BigInt::from(self.total))
    }

    /// `|mean_hat - mean| <= sigmas * sqrt(variance / N)`, decided exactly by
    /// squaring both sides.
    pub fn mean_within(&self, mean: &BigRat, variance: &BigRat, sigmas: u32) -> bool {
        let dev = (self.empirical_mean() - mean).abs();
        let bound_sq = variance * BigRat::from_integer(BigInt::from(sigmas * sigmas))
            / BigRat::from_integer(BigInt::from(self.total));
        &dev * &dev <= bound_sq
    }

    /// `(|mean_hat - mean|, sigmas * sqrt(variance / N))` as floats for
    /// display.
    pub fn deviation_report(&self, mean: &BigRat, variance: &BigRat, sigmas: u32) -> (f64, f64) {
        let dev = (self.empirical_mean() - mean).abs();
        let var = variance.to_f64().unwrap_or(f64::NAN);
        let band = f64::from(sigmas) * (var / self.total as f64).sqrt();
        (dev.to_f64().unwrap_or(f64::NAN), band)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogConcavity {
    pub holds: bool,
    /// First interior index where the inequality fails.
    pub witness: Option<usize>,
}

/// Tests `c_k^2 > c_{k-1} c_{k+1}` (or `>=` when `strict` is false) at
/// every interior index of a positive sequence.
pub fn check_log_concavity(seq: &[BigInt], strict: bool) -> Result<LogConcavity, DistError> {
    if let Some((index, value)) = seq.iter().enumerate().find(|(_, c)| !c.is_positive()) {
        return Err(DistError::NonPositive {
            index,
            value: value.clone(),
        });
    }
    let witness = (1..seq.len().saturating_sub(1)).find(|&k| {
        let lhs = &seq[k] * &seq[k];
        let rhs = &seq[k - 1] * &seq[k + 1];
        if strict {
            lhs <= rhs
        } else {
            lhs < rhs
        }
    });
    Ok(LogConcavity {
        holds: witness.is_none(),
        witness,
    })
}

/// Start of the positive window of row `n`: column 0 vanishes when `r = 0`.
pub fn positive_window_start(r: u64) -> usize {
    usize::from(r == 0)
}

/// Strict log-concavity of `|u_r(n, k)|` over its positive window.
/// Returned witnesses are column indices into the full row.
pub fn check_row_log_concavity(n: usize, r: u64) -> Result<LogConcavity, DistError> {
    let start = positive_window_start(r);
    let row = unsigned_row(n, r);
    let window = row.get(start..).unwrap_or_default();
    check_log_concavity(window, true)
        .map(|v| LogConcavity {
            holds: v.holds,
            witness: v.witness.map(|w| w + start),
        })
        .map_err(|e| match e {
            DistError::NonPositive { index, value } => DistError::NonPositive {
                index: index + start,
                value,
            },
            other => other,
        })
}

/// Newton's inequality on row `n`:
/// `c_k^2 >= ((k+1)/k) ((n-k+1)/(n-k)) c_{k-1} c_{k+1}` for `k = 1..n-1`,
/// compared as exact rationals.
pub fn check_newton_inequality(n: usize, r: u64) -> Result<bool, DistError> {
    if n < 2 {
        return Err(DistError::RowTooShort(n));
    }
    let row: Vec<BigRat> = unsigned_row(n, r)
        .into_iter()
        .map(BigRat::from_integer)
        .collect();
    Ok((1..n).all(|k| {
        let factor = BigRat::new(
            BigInt::from((k + 1) * (n - k + 1)),
            BigInt::from(k * (n - k)),
        );
        &row[k] * &row[k] >= factor * &row[k - 1] * &row[k + 1]
    }))
}
