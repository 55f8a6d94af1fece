//! Range benchmarks: orbit periods, step counts and solver-vs-brute-force
//! timings over the primes `p ≡ 1 (mod 4)` in an interval.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::prime::is_prime_u64;
use crate::solver::{brute_force_decompose, solve, start_period, SolveError, SolveOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("empty range: {lo} > {hi}")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("algorithms disagree at n = {n}: windmill {windmill:?}, brute force {brute:?}")]
    Disagreement {
        n: u64,
        windmill: Option<(u64, u64)>,
        brute: Option<(u64, u64)>,
    },
    #[error("solver failed at n = {n}: {source}")]
    Solve { n: u64, source: SolveError },
}

/// Which algorithms to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Algorithms {
    pub windmill: bool,
    pub brute: bool,
}

impl Algorithms {
    pub const BOTH: Algorithms = Algorithms {
        windmill: true,
        brute: true,
    };
    pub const WINDMILL: Algorithms = Algorithms {
        windmill: true,
        brute: false,
    };
    pub const BRUTE: Algorithms = Algorithms {
        windmill: false,
        brute: true,
    };
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub lo: u64,
    pub hi: u64,
    pub samples: u64,
    pub period_histogram: BTreeMap<u64, u64>,
    pub total_steps: u64,
    /// Mean windmill step count; `None` when there are no samples.
    pub mean_steps: Option<Ratio<u64>>,
    /// `(steps, n)` for the longest walk, smallest `n` on ties.
    pub max_steps: Option<(u64, u64)>,
    pub windmill_seconds: Option<f64>,
    pub brute_seconds: Option<f64>,
}

impl BenchReport {
    /// Flat JSON object; integers are decimal strings.
    pub fn to_json(&self) -> Value {
        let histogram: serde_json::Map<String, Value> = self
            .period_histogram
            .iter()
            .map(|(p, c)| (p.to_string(), Value::String(c.to_string())))
            .collect();
        json!({
            "lo": self.lo.to_string(),
            "hi": self.hi.to_string(),
            "samples": self.samples.to_string(),
            "period_histogram": histogram,
            "total_steps": self.total_steps.to_string(),
            "mean_steps": self.mean_steps.map(|r| format!("{}/{}", r.numer(), r.denom())),
            "max_steps": self.max_steps.map(|(s, _)| s.to_string()),
            "max_steps_at": self.max_steps.map(|(_, n)| n.to_string()),
            "windmill_seconds": self.windmill_seconds,
            "brute_seconds": self.brute_seconds,
        })
    }
}

/// Primes `p ≡ 1 (mod 4)` in `[lo, hi]`.
pub fn qualifying_primes(lo: u64, hi: u64) -> Vec<u64> {
    let first = lo.max(5);
    let first = first + (4 + 1 - first % 4) % 4;
    (first..=hi)
        .step_by(4)
        .filter(|&n| is_prime_u64(n))
        .collect()
}

struct Sample {
    n: u64,
    steps: u64,
    period: u64,
    windmill: Option<((u64, u64), Duration)>,
    brute: Option<(Option<(u64, u64)>, Duration)>,
}

fn measure(n: u64, algorithms: Algorithms) -> Result<Sample, BenchError> {
    let solve_err = |source| BenchError::Solve { n, source };
    let period = start_period(&n).map_err(solve_err)?;

    let started = Instant::now();
    let outcome = solve(&n).map_err(solve_err)?;
    let elapsed = started.elapsed();
    let (pair, steps) = match outcome {
        SolveOutcome::Decomposed {
            decomposition,
            steps,
        } => ((decomposition.u, decomposition.v), steps),
        _ => {
            return Err(BenchError::Disagreement {
                n,
                windmill: None,
                brute: brute_force_decompose(&n),
            })
        }
    };
    let windmill = algorithms.windmill.then_some((pair, elapsed));

    let brute = algorithms.brute.then(|| {
        let started = Instant::now();
        let r = brute_force_decompose(&n);
        (r, started.elapsed())
    });
    if let Some((b, _)) = brute {
        let same = b.is_some_and(|(bu, bv)| {
            let (wu, wv) = pair;
            (bu.min(bv), bu.max(bv)) == (wu.min(wv), wu.max(wv))
        });
        if !same {
            return Err(BenchError::Disagreement {
                n,
                windmill: Some(pair),
                brute: b,
            });
        }
    }
    Ok(Sample {
        n,
        steps,
        period,
        windmill,
        brute,
    })
}

/// Runs the selected algorithms on every qualifying prime in `[lo, hi]`,
/// in parallel, and aggregates the results in ascending order of `n`.
pub fn run_range(lo: u64, hi: u64, algorithms: Algorithms) -> Result<BenchReport, BenchError> {
    if lo > hi {
        return Err(BenchError::InvalidRange { lo, hi });
    }
    let primes = qualifying_primes(lo, hi);
    // warm-up, untimed
    if let Some(&p) = primes.first() {
        measure(p, algorithms)?;
    }
    let samples: Vec<Sample> = primes
        .par_iter()
        .map(|&n| measure(n, algorithms))
        .collect::<Result<_, _>>()?;

    let mut report = BenchReport {
        lo,
        hi,
        samples: samples.len() as u64,
        period_histogram: BTreeMap::new(),
        total_steps: 0,
        mean_steps: None,
        max_steps: None,
        windmill_seconds: algorithms.windmill.then_some(0.0),
        brute_seconds: algorithms.brute.then_some(0.0),
    };
    for s in &samples {
        *report.period_histogram.entry(s.period).or_insert(0) += 1;
        report.total_steps += s.steps;
        if report.max_steps.is_none_or(|(m, _)| s.steps > m) {
            report.max_steps = Some((s.steps, s.n));
        }
        if let (Some(total), Some((_, d))) = (report.windmill_seconds.as_mut(), s.windmill) {
            *total += d.as_secs_f64();
        }
        if let (Some(total), Some((_, d))) = (report.brute_seconds.as_mut(), s.brute) {
            *total += d.as_secs_f64();
        }
    }
    if report.samples > 0 {
        report.mean_steps = Some(Ratio::new(report.total_steps, report.samples));
    }
    Ok(report)
}

/// Period of `(1, 1, p div 4)` under `zagier ∘ flip`, counted per prime.
pub fn period_histogram(lo: u64, hi: u64) -> Result<BTreeMap<u64, u64>, BenchError> {
    if lo > hi {
        return Err(BenchError::InvalidRange { lo, hi });
    }
    let periods: Vec<u64> = qualifying_primes(lo, hi)
        .par_iter()
        .map(|&n| start_period(&n).map_err(|source| BenchError::Solve { n, source }))
        .collect::<Result<_, _>>()?;
    let mut hist = BTreeMap::new();
    for p in periods {
        *hist.entry(p).or_insert(0) += 1;
    }
    Ok(hist)
}
