use thiserror::Error;

use crate::Rational;

/// Failures raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate knot {knot}")]
    DuplicateKnot { knot: Rational },

    #[error("at least one knot is required")]
    EmptyKnots,

    #[error("knot and value lists differ in length ({knots} knots, {values} values)")]
    LengthMismatch { knots: usize, values: usize },

    #[error("rational function has a pole at {at}")]
    Pole { at: Rational },

    #[error("division by zero")]
    DivisionByZero,

    #[error("piecewise-linear function evaluated at {at}, outside [0, 1] without zero extension")]
    OutsideDomain { at: Rational },

    #[error("binomial coefficient C({n}, {j}) requested with j out of range")]
    BinomialRange { n: i64, j: i64 },

    #[error("step h must be positive, got {h}")]
    NonPositiveStep { h: Rational },

    #[error("polynomial of degree {degree} exceeds formal order {order}")]
    DegreeExceedsOrder { degree: usize, order: usize },

    #[error("equispaced sample of order {order} needs {expected} values, got {got}")]
    SampleLength { order: usize, expected: usize, got: usize },

    #[error("{j} does not divide {n}!")]
    NotFactorialDivisor { j: usize, n: usize },

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    /// True for failures that come from the mathematics of the request
    /// (duplicate knots, poles, out-of-domain points) rather than from
    /// malformed input text.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Parse { .. } | Error::InvalidArgument(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
