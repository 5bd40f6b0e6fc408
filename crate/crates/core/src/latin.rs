//! Permutations, cyclic Latin rectangles and their incidence matrices.

use rand::Rng;

use crate::error::{Error, Result};
use crate::support::SupportSetMatrix;

/// A bijection on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(elems: Vec<usize>) -> Result<Self> {
        let n = elems.len();
        let mut seen = vec![false; n];
        for &e in &elems {
            if e >= n || seen[e] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[e] = true;
        }
        Ok(Permutation(elems))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Uniform permutation via Fisher-Yates, consuming `n - 1` draws from `rng`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut elems: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            elems.swap(i, j);
        }
        Permutation(elems)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// A `k x n` Latin rectangle whose row `i` is `r0` rotated left by `i * rot`.
///
/// Rows are not stored; entry `(i, j)` is `r0[(j + i * rot) mod n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicLatinRectangle {
    r0: Permutation,
    k: usize,
    rot: usize,
}

/// Smallest `i` in `1..k` with `i * rot = 0 (mod n)`, if any. Rows `0` and
/// `i` then coincide and every column repeats a value.
pub fn first_repeated_row(n: usize, k: usize, rot: usize) -> Option<usize> {
    (1..k).find(|&i| (i * rot).is_multiple_of(n))
}

impl CyclicLatinRectangle {
    pub fn new(r0: Permutation, k: usize, rot: usize) -> Result<Self> {
        let n = r0.len();
        if k == 0 || k > n || rot == 0 || rot >= n {
            return Err(Error::InvalidRectangle { n, k, rot });
        }
        if let Some(i) = first_repeated_row(n, k, rot) {
            return Err(Error::NotLatin {
                n,
                rot,
                first: 0,
                second: i,
            });
        }
        Ok(CyclicLatinRectangle { r0, k, rot })
    }

    pub fn n(&self) -> usize {
        self.r0.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rot(&self) -> usize {
        self.rot
    }

    pub fn first_row(&self) -> &Permutation {
        &self.r0
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        let n = self.n();
        self.r0.as_slice()[(j + i * self.rot) % n]
    }

    pub fn row(&self, i: usize) -> Vec<usize> {
        (0..self.n()).map(|j| self.entry(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.k).map(|i| self.row(i)).collect()
    }

    /// Values in column `j`, top to bottom.
    pub fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.k).map(move |i| self.entry(i, j))
    }

    /// Incidence matrix: column `j` of the result is the set of values in
    /// column `j` of the rectangle.
    pub fn incidence(&self) -> SupportSetMatrix {
        let n = self.n();
        let mut m = SupportSetMatrix::zero(n);
        for j in 0..n {
            for v in self.column(j) {
                m.insert(v, j);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::BinaryMatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const R0: [usize; 8] = [6, 5, 4, 3, 1, 7, 0, 2];

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
        assert_eq!(
            Permutation::new(vec![0, 0, 1]),
            Err(Error::InvalidPermutation(3))
        );
        assert_eq!(
            Permutation::new(vec![0, 3, 1]),
            Err(Error::InvalidPermutation(3))
        );
    }

    #[test]
    fn random_permutation_n1() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(Permutation::random(1, &mut rng).as_slice(), &[0]);
    }

    #[test]
    fn random_permutation_is_deterministic() {
        let a = Permutation::random(8, &mut ChaCha8Rng::seed_from_u64(99));
        let b = Permutation::random(8, &mut ChaCha8Rng::seed_from_u64(99));
        assert_eq!(a, b);
        assert!(Permutation::new(a.as_slice().to_vec()).is_ok());
    }

    #[test]
    fn random_permutation_is_uniform() {
        let n = 8;
        let draws = 10_000;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts = vec![vec![0u32; n]; n];
        for _ in 0..draws {
            let p = Permutation::random(n, &mut rng);
            for (pos, &v) in p.as_slice().iter().enumerate() {
                counts[pos][v] += 1;
            }
        }
        let p = 1.0 / n as f64;
        let mean = draws as f64 * p;
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        let mut chi2 = 0.0;
        for row in &counts {
            for &c in row {
                assert!(
                    (f64::from(c) - mean).abs() <= 5.0 * sigma,
                    "count {c} outside {mean} +- 5 sigma"
                );
                chi2 += (f64::from(c) - mean).powi(2) / mean;
            }
        }
        // 49 degrees of freedom; 99.99th percentile is about 95
        assert!(chi2 < 95.0, "chi-square {chi2}");
    }

    #[test]
    fn build_example_rectangle() {
        let l = CyclicLatinRectangle::new(Permutation::new(R0.to_vec()).unwrap(), 3, 2).unwrap();
        assert_eq!(
            l.rows(),
            vec![
                vec![6, 5, 4, 3, 1, 7, 0, 2],
                vec![4, 3, 1, 7, 0, 2, 6, 5],
                vec![1, 7, 0, 2, 6, 5, 4, 3],
            ]
        );
    }

    #[test]
    fn single_row_rectangle() {
        let r0 = Permutation::new(R0.to_vec()).unwrap();
        for rot in 1..8 {
            let l = CyclicLatinRectangle::new(r0.clone(), 1, rot).unwrap();
            assert_eq!(l.rows(), vec![R0.to_vec()]);
        }
    }

    #[test]
    fn repeated_rotation_is_not_latin() {
        let r0 = Permutation::new(R0.to_vec()).unwrap();
        assert_eq!(
            CyclicLatinRectangle::new(r0.clone(), 3, 4),
            Err(Error::NotLatin {
                n: 8,
                rot: 4,
                first: 0,
                second: 2
            })
        );
        assert!(matches!(
            CyclicLatinRectangle::new(r0.clone(), 9, 1),
            Err(Error::InvalidRectangle { .. })
        ));
        assert!(matches!(
            CyclicLatinRectangle::new(r0, 3, 0),
            Err(Error::InvalidRectangle { .. })
        ));
    }

    #[test]
    fn example_incidence_matrix() {
        let l = CyclicLatinRectangle::new(Permutation::new(R0.to_vec()).unwrap(), 3, 2).unwrap();
        let m = l.incidence();
        assert_eq!(m.column(0).collect::<Vec<_>>(), vec![1, 4, 6]);
        let expected = BinaryMatrix::from_rows(&[
            [0u8, 0, 1, 0, 1, 0, 1, 0],
            [1, 0, 1, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 1, 0, 1],
            [0, 1, 0, 1, 0, 0, 0, 1],
            [1, 0, 1, 0, 0, 0, 1, 0],
            [0, 1, 0, 0, 0, 1, 0, 1],
            [1, 0, 0, 0, 1, 0, 1, 0],
            [0, 1, 0, 1, 0, 1, 0, 0],
        ])
        .unwrap();
        assert_eq!(m.to_dense(), expected);
    }

    #[test]
    fn latin_square_incidence_is_full() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let l = CyclicLatinRectangle::new(Permutation::random(7, &mut rng), 7, 3).unwrap();
        let m = l.incidence();
        for j in 0..7 {
            assert_eq!(m.column(j).collect::<Vec<_>>(), (0..7).collect::<Vec<_>>());
        }
    }

    #[test]
    fn incidence_is_balanced() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in 2..30 {
            for rot in 1..n {
                for k in 1..=n {
                    if first_repeated_row(n, k, rot).is_some() {
                        continue;
                    }
                    let l = CyclicLatinRectangle::new(Permutation::random(n, &mut rng), k, rot)
                        .unwrap();
                    let m = l.incidence();
                    for idx in 0..n {
                        assert_eq!(m.column_weight(idx), k);
                        assert_eq!(m.row_weight(idx), k);
                    }
                }
            }
        }
    }

    #[test]
    fn dense_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let n = rng.random_range(1..40);
            let dense = BinaryMatrix::from_fn(n, |_, _| rng.random());
            assert_eq!(SupportSetMatrix::from_dense(&dense).to_dense(), dense);
        }
    }

    /// Sorted multiset of |C_i ∩ C_j| over all column pairs i < j.
    fn intersection_profile(m: &SupportSetMatrix) -> Vec<usize> {
        let cols = m.columns();
        let mut sizes = Vec::new();
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                sizes.push(cols[i].iter().filter(|x| cols[j].contains(x)).count());
            }
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn intersection_profile_is_permutation_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for &(n, k, rot) in &[(8, 3, 2), (12, 3, 3), (18, 5, 3), (10, 4, 3), (9, 4, 2)] {
            let reference = intersection_profile(
                &CyclicLatinRectangle::new(Permutation::identity(n), k, rot)
                    .unwrap()
                    .incidence(),
            );
            for _ in 0..50 {
                let l =
                    CyclicLatinRectangle::new(Permutation::random(n, &mut rng), k, rot).unwrap();
                assert_eq!(intersection_profile(&l.incidence()), reference);
            }
        }
    }

    #[test]
    fn nonsingular_even_n_implies_odd_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for n in (4..=16).step_by(2) {
            for k in 1..=n {
                for rot in 1..n {
                    if first_repeated_row(n, k, rot).is_some() {
                        continue;
                    }
                    let l = CyclicLatinRectangle::new(Permutation::random(n, &mut rng), k, rot)
                        .unwrap();
                    let dense = l.incidence().to_dense();
                    if dense.inverse().is_ok() {
                        assert_eq!(k % 2, 1, "nonsingular with even k: n={n} k={k} rot={rot}");
                    }
                    if k % 2 == 0 {
                        assert!(dense.inverse().is_err(), "n={n} k={k} rot={rot}");
                    }
                }
            }
        }
    }
}
