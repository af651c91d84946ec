//! Exact coefficient arithmetic: big rationals, polynomials and rational
//! functions in the formal parameters, and the tagged [`Scalar`].

mod poly;
mod ratfunc;
mod rational;
mod ring;
mod scalar;

pub use poly::{rational_roots_in, Exponents, ParamPolynomial, Parameter, NUM_PARAMS};
pub use ratfunc::RatFunc;
pub use rational::{common_denominator, Rational};
pub use ring::{ExactDiv, Field, Ring};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
    #[error("mode mismatch: {0}")]
    ModeMismatch(&'static str),
    #[error("missing value for parameter {0}")]
    MissingParameter(String),
    #[error("polynomial is not univariate in {0}")]
    NotUnivariate(String),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
}
