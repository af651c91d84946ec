use std::collections::BTreeMap;
use std::fmt;

use super::poly::Parameter;
use super::ratfunc::RatFunc;
use super::ring::{ExactDiv, Field, Ring};
use super::{Rational, ScalarError};

/// A coefficient in one of two computation modes. Specialized values are plain
/// rationals; symbolic values are rational functions in the parameters.
///
/// The `checked_*` methods refuse to mix modes; promotion is explicit via
/// [`Scalar::to_symbolic`]. The [`Ring`] impl treats a mode mix as a bug and
/// panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Symbolic(RatFunc),
}

impl Scalar {
    pub fn rational(q: Rational) -> Self {
        Scalar::Rational(q)
    }

    pub fn var(param: Parameter) -> Self {
        Scalar::Symbolic(RatFunc::var(param))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Symbolic(_))
    }

    pub fn to_symbolic(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Symbolic(RatFunc::from_rational(q)),
            Scalar::Symbolic(_) => self.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Symbolic(_) => None,
        }
    }

    fn pair<'a>(&'a self, other: &'a Scalar) -> Result<Pair<'a>, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Pair::Rat(a, b)),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Pair::Sym(a, b)),
            _ => Err(ScalarError::ModeMismatch("rational and symbolic operands")),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(match self.pair(other)? {
            Pair::Rat(a, b) => Scalar::Rational(a + b),
            Pair::Sym(a, b) => Scalar::Symbolic(a.add(b)),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(match self.pair(other)? {
            Pair::Rat(a, b) => Scalar::Rational(a * b),
            Pair::Sym(a, b) => Scalar::Symbolic(a.mul(b)),
        })
    }

    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.inv()?),
            Scalar::Symbolic(f) => Scalar::Symbolic(f.inv()?),
        })
    }

    pub fn evaluate(&self, assignment: &BTreeMap<Parameter, Rational>) -> Result<Rational, ScalarError> {
        match self {
            Scalar::Rational(q) => Ok(q.clone()),
            Scalar::Symbolic(f) => f.evaluate(assignment),
        }
    }
}

enum Pair<'a> {
    Rat(&'a Rational, &'a Rational),
    Sym(&'a RatFunc, &'a RatFunc),
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<RatFunc> for Scalar {
    fn from(f: RatFunc) -> Self {
        Scalar::Symbolic(f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", q),
            Scalar::Symbolic(r) => write!(f, "{}", r),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Constants produced by `zero`, `one` and `from_rational` are rational; a
/// symbolic operand promotes them, since a constant is unambiguous in both
/// modes. Two genuinely symbolic/rational non-constant values never meet.
impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }
    fn one() -> Self {
        Scalar::Rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Symbolic(f) => f.is_zero(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Symbolic(a), Scalar::Rational(b)) | (Scalar::Rational(b), Scalar::Symbolic(a)) => {
                Scalar::Symbolic(a.add(&RatFunc::from_rational(b)))
            }
            _ => self.checked_add(other).expect("same mode"),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Symbolic(a), Scalar::Rational(b)) | (Scalar::Rational(b), Scalar::Symbolic(a)) => {
                Scalar::Symbolic(a.scale(b))
            }
            _ => self.checked_mul(other).expect("same mode"),
        }
    }
    fn neg(&self) -> Self {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Symbolic(f) => Scalar::Symbolic(f.neg()),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Scalar::Rational(q.clone())
    }
    fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Symbolic(f) => f.is_one(),
        }
    }
}

impl ExactDiv for Scalar {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.div(divisor).ok()
    }
}

impl Field for Scalar {
    fn inv(&self) -> Result<Self, ScalarError> {
        self.checked_inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_mismatch_is_an_error() {
        let a = Scalar::rational(Rational::frac(1, 2));
        let b = Scalar::var(Parameter::CLa);
        assert!(matches!(a.checked_add(&b), Err(ScalarError::ModeMismatch(_))));
        assert!(a.to_symbolic().checked_add(&b).is_ok());
    }

    #[test]
    fn symbolic_square() {
        let c = Scalar::var(Parameter::CLa);
        assert_eq!(c.checked_mul(&c).unwrap().to_string(), "cLa^2");
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(Scalar::zero().checked_inv().unwrap_err().to_string(), "division by zero");
    }
}
