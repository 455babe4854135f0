use alloc::string::String;

use crate::permutations::Permutation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("value {value} outside [{lo}, {hi}]")]
    OutOfRange { value: i64, lo: i64, hi: i64 },

    #[error("subset contains consecutive integers {0} and {1}")]
    NotSparse(usize, usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{what} at degree {n} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("{0} is not below {1} in the sparse-subset order")]
    NotComparable(String, String),

    #[error(transparent)]
    NotInPeakAlgebra(#[from] NotInPeakAlgebra),

    #[error("not in the descent algebra: {first} and {second} share a descent set but have different coefficients")]
    NotInDescentAlgebra { first: String, second: String },

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("operation undefined: {0}")]
    Undefined(&'static str),

    #[error("tensor element is not homogeneous")]
    Inhomogeneous,

    #[error("invalid Lie monomial: {0}")]
    InvalidMonomial(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("nilpotency iteration did not terminate within {0} steps")]
    NotNilpotent(usize),
}

/// Witness that a group-algebra element is not constant on peak classes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not in the peak algebra: {first} and {second} share a peak set but have different coefficients")]
pub struct NotInPeakAlgebra {
    pub first: Permutation,
    pub second: Permutation,
}
