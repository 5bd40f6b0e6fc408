//! The JSON matrix document.
//!
//! ```json
//! {"kind":"quasi-binary","n":8,"columns":[[5,6,7],...],"a":7,"b":13,"field_m":4,"field_poly":25,"seed":1}
//! ```
//!
//! `columns[j]` lists, in ascending order, the rows holding a 1 (binary kind)
//! or `b` (quasi-binary kind) in column `j`. Optional keys are omitted when
//! absent. Emission is a single line followed by a newline, so equal
//! documents are byte-identical.

use serde::{Deserialize, Serialize};

use quasiorth::{FieldSpec, QuasiBinaryMatrix, SupportSetMatrix};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "binary-supports")]
    BinarySupports,
    #[serde(rename = "quasi-binary")]
    QuasiBinary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub kind: Kind,
    pub n: usize,
    pub columns: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_poly: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// A document's content after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Matrix {
    Binary(SupportSetMatrix),
    Quasi(QuasiBinaryMatrix),
}

impl Matrix {
    pub fn n(&self) -> usize {
        match self {
            Matrix::Binary(m) => m.n(),
            Matrix::Quasi(q) => q.n(),
        }
    }
}

impl MatrixDocument {
    pub fn binary(m: &SupportSetMatrix, seed: Option<u64>) -> Self {
        MatrixDocument {
            kind: Kind::BinarySupports,
            n: m.n(),
            columns: m.columns(),
            a: None,
            b: None,
            field_m: None,
            field_poly: None,
            seed,
        }
    }

    pub fn quasi(q: &QuasiBinaryMatrix, seed: Option<u64>) -> Self {
        MatrixDocument {
            kind: Kind::QuasiBinary,
            n: q.n(),
            columns: q.backbone().columns(),
            a: Some(u32::from(q.a().value())),
            b: Some(u32::from(q.b().value())),
            field_m: Some(q.field().degree()),
            field_poly: Some(q.field().poly()),
            seed,
        }
    }

    pub fn from_matrix(m: &Matrix, seed: Option<u64>) -> Self {
        match m {
            Matrix::Binary(b) => Self::binary(b, seed),
            Matrix::Quasi(q) => Self::quasi(q, seed),
        }
    }

    /// Parses and validates. Column sets are normalized to ascending order.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: MatrixDocument =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let matrix = doc.to_matrix()?;
        Ok(Self::from_matrix(&matrix, doc.seed))
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        if self.n == 0 {
            return Err(CliError::Parse("n must be positive".into()));
        }
        if self.columns.len() != self.n {
            return Err(CliError::Parse(format!(
                "expected {} columns, found {}",
                self.n,
                self.columns.len()
            )));
        }
        let backbone = SupportSetMatrix::from_columns(self.n, self.columns.iter().cloned())
            .map_err(|e| CliError::Parse(e.to_string()))?;
        match self.kind {
            Kind::BinarySupports => {
                if self.a.is_some()
                    || self.b.is_some()
                    || self.field_m.is_some()
                    || self.field_poly.is_some()
                {
                    return Err(CliError::Parse(
                        "binary-supports documents carry no substitution pair or field".into(),
                    ));
                }
                Ok(Matrix::Binary(backbone))
            }
            Kind::QuasiBinary => {
                let missing =
                    |key: &str| CliError::Parse(format!("quasi-binary document lacks `{key}`"));
                let a = self.a.ok_or_else(|| missing("a"))?;
                let b = self.b.ok_or_else(|| missing("b"))?;
                let m = self.field_m.ok_or_else(|| missing("field_m"))?;
                let poly = self.field_poly.ok_or_else(|| missing("field_poly"))?;
                let field = FieldSpec::new(m, poly)?;
                let q = QuasiBinaryMatrix::substitute(
                    backbone,
                    field.element(a)?,
                    field.element(b)?,
                    field,
                )?;
                Ok(Matrix::Quasi(q))
            }
        }
    }
}
