use thiserror::Error;

use crate::ring::Mode;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("cannot combine a {left} value with a {right} value")]
    ModeMismatch { left: Mode, right: Mode },

    #[error("{value}{} is not divisible by {divisor}", .degree.map(|d| format!(" (coefficient of k^{d})")).unwrap_or_default())]
    NotDivisible {
        value: String,
        divisor: String,
        degree: Option<usize>,
    },

    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be a positive integer, got {0}")]
    InvalidK(String),

    #[error("{op} is only defined for n >= 1")]
    ZeroIndex { op: &'static str },

    #[error("characteristic discriminant {0} is not positive; real Binet roots require two distinct real roots")]
    NonPositiveDiscriminant(String),

    #[error("denominator constant term is {0}, expected 1")]
    NonUnitDenominator(String),

    #[error("invalid audit range: {0}")]
    InvalidRange(String),

    #[error(transparent)]
    Ring(#[from] RingError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
