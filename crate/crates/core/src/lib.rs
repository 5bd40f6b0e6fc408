//! Quasi-binary, quasi-orthogonal matrices over GF(2^m).
//!
//! Random orthogonal binary matrices are built as products of incidence
//! matrices of cyclic Latin rectangles, using only exclusive unions of column
//! support sets. Substituting two distinct nonzero field elements `a`, `b`
//! for the 0s and 1s gives a matrix whose inverse is its transpose under the
//! substitution `a -> c`, `b -> d`.
//!
//! ```
//! use quasiorth::{random_orthogonal_binary_matrix, FieldSpec, GeneratorConfig, QuasiBinaryMatrix};
//!
//! let field = FieldSpec::new(4, 0x19).unwrap();
//! let p = random_orthogonal_binary_matrix(&GeneratorConfig::new(16, 42)).unwrap();
//! let q = QuasiBinaryMatrix::substitute(
//!     p,
//!     field.element(7).unwrap(),
//!     field.element(13).unwrap(),
//!     field,
//! )
//! .unwrap();
//! let inv = q.quasi_inverse().unwrap();
//! assert_eq!((inv.a().value(), inv.b().value()), (4, 15));
//! assert!(quasiorth::verify_quasi_inverse(&q, &inv).unwrap());
//! ```

pub mod error;
pub mod gf2m;
pub mod latin;
pub mod oracle;
pub mod orthogen;
pub mod quasi;
pub mod support;

pub use error::{Error, Result};
pub use gf2m::{FieldElement, FieldSpec};
pub use latin::{CyclicLatinRectangle, Permutation};
pub use oracle::{BinaryMatrix, FieldMatrix};
pub use orthogen::{
    draw_rectangles, find_params, is_orthogonal_triplet, random_orthogonal_binary_matrix,
    search_table, support_product, weight_stats, GeneratorConfig, ParamTriplet, WeightStats,
    DEFAULT_ITERATIONS,
};
pub use quasi::{
    inverse_pair, solve_pair_system, verify_quasi_inverse, InversePair, QuasiBinaryMatrix,
};
pub use support::SupportSetMatrix;
