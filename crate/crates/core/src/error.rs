// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

use crate::nice::NiceViolation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failures of the exact pipeline. Indices in messages are 1-based, matching
/// the `e_1, ..., e_n` basis notation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("endomorphism #{index} is not a derivation")]
    NotDerivation { index: usize },
    #[error("derivations #{first} and #{second} do not commute")]
    NonCommuting { first: usize, second: usize },
    #[error("derivation #{index} is not self-adjoint with respect to the metric")]
    NotSelfAdjoint { index: usize },
    #[error("soliton derivation is not in the span of the abelian factor")]
    DerivationNotInSpan,
    #[error("trace form is degenerate on the abelian factor")]
    DegenerateGram,
    #[error("not a nice basis: {0}")]
    NotNice(NiceViolation),
    #[error("diagonal Nikolayevsky derivation is not unique ({free} free directions)")]
    NonUniqueNikolayevsky { free: usize },
    #[error("linear system is inconsistent: {0}")]
    Inconsistent(&'static str),
    #[error("right-hand side component {index} is zero")]
    ZeroRhs { index: usize },
    #[error("X component for arrow {row} vanishes: no diagonal metric")]
    ZeroTarget { row: usize },
    #[error("Jacobi identity fails on (e_{0}, e_{1}, e_{2})", .i + 1, .j + 1, .k + 1)]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("λ must be nonzero")]
    ZeroLambda,
    #[error("constructed metric is not Einstein with the requested constant: {0}")]
    NotEinstein(String),
    #[error("metric is not a nilsoliton with the requested constant")]
    NotNilsoliton,
}
