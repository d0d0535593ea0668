//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by exact-arithmetic operations.
///
/// Every variant names the violated precondition; operations never
/// return approximate results in place of an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("matrix order {order} is smaller than the maximal degree {max_deg}")]
    BadOrder { order: usize, max_deg: usize },

    #[error("monomial exponents must satisfy lambda >= mu > nu >= 0, got ({lambda}, {mu}, {nu})")]
    BadExponents { lambda: usize, mu: usize, nu: usize },

    #[error("matrix is not symmetric (first mismatch at ({row}, {col}))")]
    NotSymmetric { row: usize, col: usize },

    #[error("degree {degree} is too small; need at least {min}")]
    DegreeTooSmall { degree: i64, min: usize },

    #[error("family is degenerate: the seed polynomial must be nonzero of degree >= 1")]
    DegenerateFamily,

    #[error("seed polynomial is not separable (its discriminant vanishes)")]
    NotSeparable,

    #[error("need n > deg g >= 1, got n = {n}, deg g = {s}")]
    DegreeOrder { n: usize, s: i64 },

    #[error("determinant polynomial is identically zero")]
    IdenticallyZero,

    #[error("evaluation point {xi} does not exceed the threshold {threshold}")]
    ThresholdViolation { xi: String, threshold: String },

    #[error("evaluation point must be positive, got {xi}")]
    BadSign { xi: String },

    #[error("evaluation point must be nonzero")]
    ZeroXi,

    #[error("seed polynomial has a real root, so it is not totally complex")]
    NotTotallyComplex,

    #[error("n - deg g must be even, got n = {n}, deg g = {s}")]
    BadParity { n: usize, s: usize },

    #[error("leading coefficient of the seed polynomial must be positive")]
    BadLeadingSign,

    #[error("index out of range: {what}")]
    OutOfRange { what: String },

    #[error("invalid sweep configuration: {reason}")]
    InvalidSweep { reason: String },

    #[error("cannot parse rational from {input:?}")]
    ParseRational { input: String },

    #[error("malformed matrix: {reason}")]
    MalformedMatrix { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
