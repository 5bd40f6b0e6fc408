//! Orthogonal binary matrices as products of cyclic-Latin-rectangle
//! incidence matrices, computed entirely on column support sets.
//!
//! A triplet `(n, k, rot)` is usable when the incidence matrix of every
//! `k x n` cyclic Latin rectangle with rotation step `rot` is orthogonal over
//! GF(2). The generator multiplies several random such matrices together,
//! but never forms a dense product: column `i` of `D * C` is the exclusive
//! union of the columns of `D` indexed by column `i` of `C`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::latin::{first_repeated_row, CyclicLatinRectangle, Permutation};
use crate::support::SupportSetMatrix;

pub const DEFAULT_ITERATIONS: usize = 6;

/// Largest row count tried by [`find_params`].
pub const MAX_SEARCH_K: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamTriplet {
    pub n: usize,
    pub k: usize,
    pub rot: usize,
}

impl std::fmt::Display for ParamTriplet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.rot)
    }
}

/// Whether every cyclic Latin rectangle with these parameters has an
/// orthogonal incidence matrix.
///
/// Column `j` of the rectangle reads `r0` at positions
/// `S_j = { j + i*rot mod n : i < k }`, so `M^T M` has entry `|S_a ∩ S_b|`
/// independently of `r0`. Orthogonality needs `k` odd on the diagonal and an
/// even overlap for every nonzero shift `d`. The overlap `|S_0 ∩ S_d|` is the
/// number of ordered pairs in `S_0` whose difference is `d`.
pub fn is_orthogonal_triplet(n: usize, k: usize, rot: usize) -> bool {
    if n < 2 || k == 0 || k > n || rot == 0 || rot >= n {
        return false;
    }
    if k.is_multiple_of(2) || first_repeated_row(n, k, rot).is_some() {
        return false;
    }
    let mut overlap = vec![0u32; n];
    for a in 0..k {
        for b in 0..k {
            if a != b {
                let diff = ((b + n * k - a) * rot) % n;
                overlap[diff] += 1;
            }
        }
    }
    overlap[1..].iter().all(|&c| c % 2 == 0)
}

/// Smallest odd `k` (then smallest `rot`) giving an orthogonal triplet.
///
/// `k` runs over odd values `3..=min(n - 3, 64)`. The value `k = n - 1` is
/// excluded: with `rot = 1` it always works, since the incidence matrix is
/// then the complement of a permutation matrix, and it would add a
/// degenerate entry for every `n = 2p`.
pub fn find_params(n: usize) -> Result<ParamTriplet> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let k_max = n.saturating_sub(3).min(MAX_SEARCH_K);
    (3..=k_max)
        .step_by(2)
        .find_map(|k| {
            (1..n)
                .find(|&rot| is_orthogonal_triplet(n, k, rot))
                .map(|rot| ParamTriplet { n, k, rot })
        })
        .ok_or(Error::TripletNotFound(n))
}

/// [`find_params`] for every even `n` in `n_min..=n_max`, misses dropped.
pub fn search_table(n_min: usize, n_max: usize) -> Vec<ParamTriplet> {
    let evens: Vec<usize> = (n_min..=n_max).filter(|n| n % 2 == 0).collect();
    let threads = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(evens.len().max(1));
    let chunk = evens.len().div_ceil(threads).max(1);
    let mut table: Vec<ParamTriplet> = std::thread::scope(|scope| {
        let handles: Vec<_> = evens
            .chunks(chunk)
            .map(|ns| {
                scope.spawn(move || {
                    ns.iter()
                        .filter_map(|&n| find_params(n).ok())
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    table.sort();
    table
}

/// Column `i` of the result is the exclusive union of the columns of `prev`
/// indexed by column `i` of `factor`, i.e. the support of column `i` of the
/// GF(2) product `prev * factor`.
pub fn support_product(
    prev: &SupportSetMatrix,
    factor: &SupportSetMatrix,
) -> Result<SupportSetMatrix> {
    let n = prev.n();
    if factor.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: factor.n(),
        });
    }
    let mut out = SupportSetMatrix::zero(n);
    for i in 0..n {
        for l in factor.column(i) {
            let src = prev.column_words(l);
            for (dst, &w) in out.column_words_mut(i).iter_mut().zip(src) {
                *dst ^= w;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub iterations: usize,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        GeneratorConfig {
            n,
            iterations: DEFAULT_ITERATIONS,
            seed,
        }
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = iterations;
        self
    }

    /// The ChaCha8 stream all randomness of a generation is drawn from.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// The cyclic Latin rectangles a generation run multiplies together, in
/// order. Each consumes one fresh permutation from the config's stream.
pub fn draw_rectangles(cfg: &GeneratorConfig) -> Result<Vec<CyclicLatinRectangle>> {
    if cfg.iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    let params = find_params(cfg.n).map_err(|_| Error::TripletNotFound(cfg.n))?;
    let mut rng = cfg.rng();
    (0..cfg.iterations)
        .map(|_| {
            let r0 = Permutation::random(params.n, &mut rng);
            CyclicLatinRectangle::new(r0, params.k, params.rot)
        })
        .collect()
}

/// Random orthogonal `n x n` binary matrix as column supports.
///
/// Starts from the identity supports and folds in the incidence matrix of
/// one random cyclic Latin rectangle per iteration. Deterministic in
/// `cfg.seed`.
pub fn random_orthogonal_binary_matrix(cfg: &GeneratorConfig) -> Result<SupportSetMatrix> {
    draw_rectangles(cfg)?
        .iter()
        .try_fold(SupportSetMatrix::identity(cfg.n), |acc, l| {
            support_product(&acc, &l.incidence())
        })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightStats {
    pub min: usize,
    pub max: usize,
    pub mean: f64,
}

/// Column-weight statistics of a support matrix.
pub fn weight_stats(p: &SupportSetMatrix) -> WeightStats {
    let weights: Vec<usize> = (0..p.n()).map(|j| p.column_weight(j)).collect();
    let min = weights.iter().copied().min().unwrap_or(0);
    let max = weights.iter().copied().max().unwrap_or(0);
    let mean = if weights.is_empty() {
        0.0
    } else {
        weights.iter().sum::<usize>() as f64 / weights.len() as f64
    };
    WeightStats { min, max, mean }
}
