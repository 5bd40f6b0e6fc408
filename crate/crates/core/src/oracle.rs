//! Schoolbook dense linear algebra over GF(2) and GF(2^m).
//!
//! These routines are the ground truth the support-set kernel is checked
//! against, so they are intentionally naive: bit-by-bit triple loops and
//! plain Gauss-Jordan elimination. Nothing here calls into `support` or
//! `orthogen`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};

/// Dense n x n matrix over GF(2), one bitvector per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<Vec<bool>>,
}

impl BinaryMatrix {
    pub fn zero(n: usize) -> Self {
        BinaryMatrix {
            n,
            rows: vec![vec![false; n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| i == j)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        BinaryMatrix {
            n,
            rows: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect(),
        }
    }

    /// Rows of 0/1 values. Every row must have length equal to the row count.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                m.rows[i][j] = v != 0;
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.rows[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.rows[i]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.rows[j][i])
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = false;
                for l in 0..n {
                    acc ^= self.rows[i][l] & other.rows[l][j];
                }
                out.rows[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r][col]).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r][col] {
                    for c in 0..n {
                        a[r][c] ^= a[col][c];
                        inv[r][c] ^= inv[col][c];
                    }
                }
            }
        }
        Ok(BinaryMatrix { n, rows: inv })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.rows[i][j] == (i == j)))
    }

    /// True iff `A * A^T = I` over GF(2).
    pub fn is_orthogonal(&self) -> bool {
        self.matmul(&self.transpose())
            .map(|p| p.is_identity())
            .unwrap_or(false)
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().filter(|&&b| b).count())
            .collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        (0..self.n)
            .map(|j| (0..self.n).filter(|&i| self.rows[i][j]).count())
            .collect()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix({}x{})", self.n, self.n)?;
        for row in &self.rows {
            let line: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

/// Dense n x n matrix over a GF(2^m), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: FieldSpec,
    n: usize,
    entries: Vec<FieldElement>,
}

impl FieldMatrix {
    pub fn from_fn(
        field: FieldSpec,
        n: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        FieldMatrix { field, n, entries }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::from_fn(field, n, |i, j| {
            if i == j {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        })
    }

    /// Rows of integer-encoded elements.
    pub fn from_rows<R: AsRef<[u32]>>(field: FieldSpec, rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            check_dims(n, row.len())?;
            for &v in row {
                entries.push(field.element(v)?);
            }
        }
        Ok(FieldMatrix { field, n, entries })
    }

    /// Embeds a 0/1 matrix with 0 -> zero and 1 -> one.
    pub fn lift(field: FieldSpec, m: &BinaryMatrix) -> Self {
        Self::from_fn(field, m.n(), |i, j| {
            if m.get(i, j) {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u16>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.iter().map(|e| e.value()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.n, |i, j| self.get(j, i))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        check_dims(self.n, other.n)?;
        let f = self.field;
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FieldElement::ZERO;
                for l in 0..n {
                    acc = f.add(acc, f.mul(self.get(i, l), other.get(l, j)));
                }
                entries.push(acc);
            }
        }
        Ok(FieldMatrix {
            field: f,
            n,
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    v == FieldElement::ONE
                } else {
                    v.is_zero()
                }
            })
        })
    }
}
