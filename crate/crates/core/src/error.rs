// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("unsupported extension degree {0}")]
    UnsupportedDegree(u32),
    #[error("modulus is not irreducible of degree {0}")]
    ReducibleModulus(u32),
    #[error("target is not in the subgroup generated by the base")]
    NotInSubgroup,
    #[error("inconsistent system of congruences")]
    InconsistentSystem,
    #[error("empty system of congruences")]
    EmptySystem,
    #[error("not an eigenvalue")]
    NotAnEigenvalue,
    #[error("subspace not invariant")]
    SubspaceNotInvariant,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("not a power pair (block {block:?}): {reason}")]
    NotAPowerPair { block: Option<usize>, reason: String },
    #[error("corrupted generator data: {0}")]
    CorruptGeneratorData(String),
    #[error("gave up after {0} resampling attempts")]
    ResamplingCapExceeded(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn not_power(block: Option<usize>, reason: impl Into<String>) -> Self {
        Error::NotAPowerPair {
            block,
            reason: reason.into(),
        }
    }
}
