use thiserror::Error;

/// Errors produced by the field, rectangle, generator and substitution layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field degree {0} outside the supported range 2..=16")]
    DegreeOutOfRange(u32),
    #[error("polynomial {poly:#x} does not have degree {m}")]
    DegreeMismatch { m: u32, poly: u32 },
    #[error("polynomial {0:#x} is reducible over GF(2)")]
    ReduciblePolynomial(u32),
    #[error("value {value} is not an element of GF(2^{m})")]
    NotAnElement { value: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements of different fields")]
    FieldMismatch,

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("rectangle parameters out of range: n = {n}, k = {k}, rot = {rot}")]
    InvalidRectangle { n: usize, k: usize, rot: usize },
    #[error("rows {first} and {second} repeat a value in every column (rot = {rot}, n = {n})")]
    NotLatin {
        n: usize,
        rot: usize,
        first: usize,
        second: usize,
    },
    #[error("column {column}: {reason}")]
    InvalidSupport { column: usize, reason: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {0} is odd; only even dimensions admit orthogonal incidence matrices")]
    OddDimension(usize),
    #[error("no (n, k, rot) triplet exists for n = {0}")]
    TripletNotFound(usize),
    #[error("iteration count must be at least 1")]
    ZeroIterations,

    #[error("bad substitution pair (a = {a}, b = {b}): values must be nonzero and distinct")]
    BadPair { a: u16, b: u16 },
    #[error("pair system is singular (a^2 = b^2)")]
    SingularSystem,
    #[error("matrix is singular over GF(2)")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
