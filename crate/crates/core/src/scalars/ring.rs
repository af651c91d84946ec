use std::fmt;

use super::{Rational, ScalarError};

/// Commutative ring with unit over which modules and matrices are built.
///
/// Methods are named like the std operator traits but take `&self`; the std
/// traits are deliberately not required so polynomial and rational-function
/// coefficients can share one generic engine.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }
}

/// Rings where exact division (when it exists) is computable. Fraction-free
/// elimination needs nothing more.
pub trait ExactDiv: Ring {
    /// `Some(q)` with `q * divisor == self`, or `None` when no such `q` exists.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

pub trait Field: ExactDiv {
    fn inv(&self) -> Result<Self, ScalarError>;

    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
}

impl ExactDiv for Rational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self, ScalarError> {
        Rational::inv(self)
    }
}
