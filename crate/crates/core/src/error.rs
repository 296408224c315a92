use thiserror::Error;

use crate::half::HalfInteger;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("radicand {radicand} exceeds the factorization bound {bound}")]
    RadicandOverflow { radicand: String, bound: u64 },

    #[error("square root of negative rational {0}")]
    NegativeRadicand(String),

    #[error("cannot invert {0}: only single-term radicals are invertible")]
    MultiTermInverse(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("lambda {lambda} exceeds the configured cap {cap}")]
    LambdaTooLarge { lambda: HalfInteger, cap: HalfInteger },

    #[error("invalid lambda {0}: must be a non-negative half-integer")]
    InvalidLambda(String),

    #[error("invalid J = {j} for lambda = {lambda}")]
    InvalidJ { lambda: HalfInteger, j: HalfInteger },

    #[error("ladder terminated early at {0}")]
    DegenerateState(String),

    #[error("phase of state {0} cannot be fixed: leading coefficient is not real")]
    PhaseUndetermined(String),

    #[error("{0}")]
    NonProportional(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("eigenvector matrix is ill-conditioned (condition number {0:.3e})")]
    IllConditioned(f64),

    #[error("mode eigenvalues differ: {0} vs {1}")]
    EigenvalueMismatch(f64, f64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
