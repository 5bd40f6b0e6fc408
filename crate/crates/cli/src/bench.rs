//! Timing of the support-set generator against a dense construction that
//! multiplies the same incidence matrices with schoolbook GF(2) matmul.

use std::time::{Duration, Instant};

use quasiorth::{draw_rectangles, random_orthogonal_binary_matrix, BinaryMatrix, GeneratorConfig};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub n: usize,
    pub reps: usize,
    pub iterations: usize,
    pub support_mean: Duration,
    pub naive_mean: Duration,
}

impl BenchReport {
    pub fn speedup(&self) -> f64 {
        self.naive_mean.as_secs_f64() / self.support_mean.as_secs_f64().max(f64::MIN_POSITIVE)
    }
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "n = {}, iterations = {}, reps = {}",
            self.n, self.iterations, self.reps
        )?;
        writeln!(
            f,
            "support-set path: {:.3} us/matrix",
            self.support_mean.as_secs_f64() * 1e6
        )?;
        writeln!(
            f,
            "naive matmul path: {:.3} us/matrix",
            self.naive_mean.as_secs_f64() * 1e6
        )?;
        writeln!(f, "speedup: {:.1}x", self.speedup())
    }
}

/// Dense construction: identity times each incidence matrix in turn.
pub fn naive_orthogonal_binary_matrix(cfg: &GeneratorConfig) -> Result<BinaryMatrix, CliError> {
    let mut acc = BinaryMatrix::identity(cfg.n);
    for l in draw_rectangles(cfg)? {
        let dense = BinaryMatrix::from_fn(cfg.n, |i, j| l.column(j).any(|v| v == i));
        acc = acc.matmul(&dense)?;
    }
    Ok(acc)
}

pub fn run(n: usize, reps: usize, iterations: usize, seed: u64) -> Result<BenchReport, CliError> {
    if reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let configs: Vec<GeneratorConfig> = (0..reps as u64)
        .map(|r| GeneratorConfig::new(n, seed.wrapping_add(r)).with_iterations(iterations))
        .collect();
    // fail fast on a missing triplet before timing anything
    random_orthogonal_binary_matrix(&configs[0])?;

    let start = Instant::now();
    for cfg in &configs {
        std::hint::black_box(random_orthogonal_binary_matrix(cfg)?);
    }
    let support_total = start.elapsed();

    let start = Instant::now();
    for cfg in &configs {
        std::hint::black_box(naive_orthogonal_binary_matrix(cfg)?);
    }
    let naive_total = start.elapsed();

    Ok(BenchReport {
        n,
        reps,
        iterations,
        support_mean: support_total / reps as u32,
        naive_mean: naive_total / reps as u32,
    })
}
