use std::collections::BTreeMap;
use std::fmt;

use super::poly::{ParamPolynomial, Parameter};
use super::ring::{ExactDiv, Field, Ring};
use super::{Rational, ScalarError};

/// Quotient of two parameter polynomials in canonical form: coprime, with a
/// monic denominator. Equal values therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: ParamPolynomial,
    den: ParamPolynomial,
}

impl RatFunc {
    pub fn new(num: ParamPolynomial, den: ParamPolynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::from_poly(num));
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lc = den.leading_coefficient().inv().expect("nonzero");
        Ok(RatFunc { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: ParamPolynomial) -> Self {
        RatFunc { num: p, den: ParamPolynomial::one() }
    }

    pub fn var(param: Parameter) -> Self {
        RatFunc::from_poly(ParamPolynomial::var(param))
    }

    pub fn numerator(&self) -> &ParamPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPolynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn evaluate(&self, assignment: &BTreeMap<Parameter, Rational>) -> Result<Rational, ScalarError> {
        let n = self.num.evaluate(assignment)?;
        let d = self.den.evaluate(assignment)?;
        n.checked_div(&d)
    }

    pub fn specialize(&self, assignment: &BTreeMap<Parameter, Rational>) -> Result<Self, ScalarError> {
        RatFunc::new(self.num.specialize(assignment), self.den.specialize(assignment))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(ParamPolynomial::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(ParamPolynomial::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        RatFunc::new(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominators")
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc::from_poly(ParamPolynomial::constant(q.clone()))
    }
    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(q), den: self.den.clone() }
    }
}

impl ExactDiv for RatFunc {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.div(divisor).ok()
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_common_factors() {
        let p = RatFunc::var(Parameter::P);
        let one = RatFunc::one();
        let a = p.mul(&p).sub(&one);
        let b = p.sub(&one);
        let q = a.div(&b).unwrap();
        assert!(q.is_polynomial());
        assert_eq!(q, p.add(&one));
    }

    #[test]
    fn inverse_roundtrip() {
        let r = RatFunc::var(Parameter::R);
        let x = r.add(&RatFunc::from_int(3)).scale(&Rational::frac(2, 5));
        assert_eq!(x.mul(&x.inv().unwrap()), RatFunc::one());
        assert!(RatFunc::zero().inv().is_err());
    }
}
