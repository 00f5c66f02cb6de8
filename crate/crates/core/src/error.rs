//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by exact-arithmetic operations.
///
/// Every computation in this crate is total on its documented domain;
/// these variants mark the documented exits, never numerical trouble.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    /// A chain was requested for a constant (or zero) polynomial.
    #[error("polynomial degree {degree} is too small (need degree >= 1)")]
    DegreeTooSmall { degree: isize },

    /// Root counting requires the interval endpoints to avoid roots.
    #[error("f({endpoint}) = 0: interval endpoints must not be roots")]
    EndpointIsRoot { endpoint: String },

    /// An interval with `a >= b` was supplied.
    #[error("bad interval: {a} >= {b}")]
    BadInterval { a: String, b: String },

    /// The remainder scheme loses more than one degree at step `index`,
    /// i.e. the determinant c(index) vanishes.
    #[error("degenerate chain: c({index}) = 0")]
    DegenerateChain { index: usize },

    /// A polynomial pair must have degrees (n-1, n-2).
    #[error("degree mismatch: deg f1 = {deg1}, deg f2 = {deg2}, expected deg f1 = deg f2 + 1")]
    DegreeMismatch { deg1: isize, deg2: isize },

    /// A normalized quantity has a vanishing denominator.
    #[error("undefined entry: {context}")]
    UndefinedEntry { context: String },

    /// An explicit generator assignment has no value for (j, i).
    #[error("missing generator b({j})_{i}")]
    MissingGenerator { j: i64, i: i64 },

    /// A matrix argument has the wrong dimensions.
    #[error("shape error: expected {expected}, got {got}")]
    ShapeError { expected: String, got: String },

    /// An index argument is outside its documented range.
    #[error("bad index: {context}")]
    BadIndex { context: String },

    /// The third hypergeometric parameter hits zero or a negative integer
    /// before the requested order.
    #[error("pole in gamma parameter at term {term}")]
    PoleInGamma { term: usize },

    /// A Cauchy node pair sums to zero.
    #[error("singular pair: x[{row}] + y[{col}] = 0")]
    SingularPair { row: usize, col: usize },

    /// Two routes that must agree exactly disagreed. This indicates a bug
    /// and is surfaced instead of being silently resolved.
    #[error("cross-check failed in {context}")]
    CrossCheck { context: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
