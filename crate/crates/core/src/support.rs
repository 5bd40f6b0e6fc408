//! Binary matrices stored column by column as support sets.
//!
//! Column `j` is the set `{ i : m[i][j] = 1 }`, packed into `ceil(n / 64)`
//! words so that the exclusive union of two columns is a word-wise XOR.
//! Iteration over a column always yields indices in ascending order, which
//! is the canonical form used for equality and serialization.

use std::fmt;

use crate::error::{Error, Result};
use crate::oracle::BinaryMatrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SupportSetMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl SupportSetMatrix {
    /// The all-empty matrix.
    pub fn zero(n: usize) -> Self {
        let words = words_for(n);
        SupportSetMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Column `i` is `{i}`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.insert(i, i);
        }
        m
    }

    /// Builds from explicit column sets. Indices may come in any order but
    /// must be in range and not repeat within a column.
    pub fn from_columns<C, I>(n: usize, columns: C) -> Result<Self>
    where
        C: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut m = Self::zero(n);
        let mut count = 0;
        for (j, column) in columns.into_iter().enumerate() {
            if j >= n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: j + 1,
                });
            }
            for i in column {
                if i >= n {
                    return Err(Error::InvalidSupport {
                        column: j,
                        reason: format!("row index {i} out of range for n = {n}"),
                    });
                }
                if m.contains(i, j) {
                    return Err(Error::InvalidSupport {
                        column: j,
                        reason: format!("row index {i} repeated"),
                    });
                }
                m.insert(i, j);
            }
            count += 1;
        }
        if count != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: count,
            });
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn column_words(&self, j: usize) -> &[u64] {
        &self.bits[j * self.words..(j + 1) * self.words]
    }

    pub(crate) fn column_words_mut(&mut self, j: usize) -> &mut [u64] {
        &mut self.bits[j * self.words..(j + 1) * self.words]
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        (self.column_words(col)[row / 64] >> (row % 64)) & 1 == 1
    }

    pub(crate) fn insert(&mut self, row: usize, col: usize) {
        self.column_words_mut(col)[row / 64] |= 1 << (row % 64);
    }

    /// Sorted row indices of column `j`.
    pub fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.column_words(j)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |b| w * 64 + b))
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|j| self.column(j).collect()).collect()
    }

    pub fn column_weight(&self, j: usize) -> usize {
        self.column_words(j)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Number of columns whose support contains `row`.
    pub fn row_weight(&self, row: usize) -> usize {
        (0..self.n).filter(|&j| self.contains(row, j)).count()
    }

    /// Swaps the roles of rows and columns: the new column `i` is the set of
    /// old columns whose support contains `i`.
    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for j in 0..self.n {
            for i in self.column(j) {
                t.insert(j, i);
            }
        }
        t
    }

    /// Dense row-bitvector form for the reference routines.
    pub fn to_dense(&self) -> BinaryMatrix {
        let mut dense = BinaryMatrix::zero(self.n);
        for j in 0..self.n {
            for i in self.column(j) {
                dense.set(i, j, true);
            }
        }
        dense
    }

    pub fn from_dense(dense: &BinaryMatrix) -> Self {
        let n = dense.n();
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                if dense.get(i, j) {
                    m.insert(i, j);
                }
            }
        }
        m
    }
}

impl fmt::Debug for SupportSetMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SupportSetMatrix")
            .field("n", &self.n)
            .field("columns", &self.columns())
            .finish()
    }
}

/// Positions of set bits, lowest first.
struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
