//! Quasi-binary matrices over GF(2^m) and their substitution inverses.
//!
//! An orthogonal binary backbone `P` with every 0 replaced by `a` and every 1
//! by `b` is inverted by transposing it and substituting `c` for `a` and `d`
//! for `b`, where `(c, d)` solves
//!
//! ```text
//! a*c + b*d = 1
//! b*c + a*d = 0
//! ```
//!
//! In characteristic 2 this gives `c = a / (a + b)^2` and `d = b / (a + b)^2`.

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::oracle::FieldMatrix;
use crate::support::SupportSetMatrix;

/// `(c, d)` with `a*c + b*d = 1` and `b*c + a*d = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InversePair {
    pub c: FieldElement,
    pub d: FieldElement,
}

fn check_pair(field: &FieldSpec, a: FieldElement, b: FieldElement) -> Result<()> {
    let bad = || Error::BadPair {
        a: a.value(),
        b: b.value(),
    };
    if !field.contains(a) || !field.contains(b) || a.is_zero() || b.is_zero() || a == b {
        return Err(bad());
    }
    Ok(())
}

/// Closed-form characteristic-2 inverse pair.
pub fn inverse_pair(a: FieldElement, b: FieldElement, field: &FieldSpec) -> Result<InversePair> {
    check_pair(field, a, b)?;
    let denom = field.square(field.add(a, b));
    let scale = field.inv(denom)?;
    Ok(InversePair {
        c: field.mul(a, scale),
        d: field.mul(b, scale),
    })
}

/// Solves the 2x2 system for `(c, d)` by Cramer's rule without assuming
/// characteristic 2 in the algebra (subtraction is written out, then
/// evaluated as field addition).
pub fn solve_pair_system(
    a: FieldElement,
    b: FieldElement,
    field: &FieldSpec,
) -> Result<InversePair> {
    // [a b; b a] [c; d] = [1; 0]
    let sub = |x, y| field.add(x, y);
    let det = sub(field.mul(a, a), field.mul(b, b));
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let det_c = sub(
        field.mul(FieldElement::ONE, a),
        field.mul(b, FieldElement::ZERO),
    );
    let det_d = sub(
        field.mul(a, FieldElement::ZERO),
        field.mul(b, FieldElement::ONE),
    );
    Ok(InversePair {
        c: field.div(det_c, det)?,
        d: field.div(det_d, det)?,
    })
}

/// A binary backbone under the substitution 0 -> `a`, 1 -> `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiBinaryMatrix {
    backbone: SupportSetMatrix,
    a: FieldElement,
    b: FieldElement,
    field: FieldSpec,
}

impl QuasiBinaryMatrix {
    /// The backbone is expected to be orthogonal over GF(2); this is not
    /// re-checked here (see [`verify_quasi_inverse`]).
    pub fn substitute(
        backbone: SupportSetMatrix,
        a: FieldElement,
        b: FieldElement,
        field: FieldSpec,
    ) -> Result<Self> {
        check_pair(&field, a, b)?;
        Ok(QuasiBinaryMatrix {
            backbone,
            a,
            b,
            field,
        })
    }

    pub fn backbone(&self) -> &SupportSetMatrix {
        &self.backbone
    }

    pub fn a(&self) -> FieldElement {
        self.a
    }

    pub fn b(&self) -> FieldElement {
        self.b
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.backbone.n()
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        if self.backbone.contains(i, j) {
            self.b
        } else {
            self.a
        }
    }

    /// Transposed backbone with the pair replaced by its inverse pair.
    pub fn quasi_inverse(&self) -> Result<Self> {
        let InversePair { c, d } = inverse_pair(self.a, self.b, &self.field)?;
        Ok(QuasiBinaryMatrix {
            backbone: self.backbone.transpose(),
            a: c,
            b: d,
            field: self.field,
        })
    }

    /// Explicit dense materialization.
    pub fn to_field_matrix(&self) -> FieldMatrix {
        FieldMatrix::from_fn(self.field, self.n(), |i, j| self.entry(i, j))
    }
}

/// Whether `q * r` is the identity, by a full dense product over the field.
pub fn verify_quasi_inverse(q: &QuasiBinaryMatrix, r: &QuasiBinaryMatrix) -> Result<bool> {
    if q.field != r.field {
        return Err(Error::FieldMismatch);
    }
    if q.n() != r.n() {
        return Err(Error::DimensionMismatch {
            left: q.n(),
            right: r.n(),
        });
    }
    let product = q.to_field_matrix().matmul(&r.to_field_matrix())?;
    Ok(product.is_identity())
}
