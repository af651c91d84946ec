//! Sparse multivariate polynomials over the rationals in the fixed parameter
//! set `cL, cA, cLa, r, p`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ring::{ExactDiv, Ring};
use super::{Rational, ScalarError};

pub const NUM_PARAMS: usize = 5;

/// The formal parameters. The set is closed: central charges `cL`, `cA`,
/// `cLa` and the weight labels `r`, `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parameter {
    #[serde(rename = "cL")]
    CL,
    #[serde(rename = "cA")]
    CA,
    #[serde(rename = "cLa")]
    CLa,
    #[serde(rename = "r")]
    R,
    #[serde(rename = "p")]
    P,
}

impl Parameter {
    pub const ALL: [Parameter; NUM_PARAMS] = [Parameter::CL, Parameter::CA, Parameter::CLa, Parameter::R, Parameter::P];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Parameter::CL => "cL",
            Parameter::CA => "cA",
            Parameter::CLa => "cLa",
            Parameter::R => "r",
            Parameter::P => "p",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parameter::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| ScalarError::Parse(s.to_string()))
    }
}

pub type Exponents = [u32; NUM_PARAMS];

/// Multivariate polynomial with rational coefficients. No zero coefficient is
/// ever stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPolynomial {
    terms: BTreeMap<Exponents, Rational>,
}

impl ParamPolynomial {
    pub fn zero() -> Self {
        ParamPolynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = ParamPolynomial::zero();
        p.add_term([0; NUM_PARAMS], c);
        p
    }

    pub fn var(param: Parameter) -> Self {
        let mut e = [0; NUM_PARAMS];
        e[param.index()] = 1;
        let mut p = ParamPolynomial::zero();
        p.add_term(e, Rational::one());
        p
    }

    pub fn monomial(coeff: Rational, exps: Exponents) -> Self {
        let mut p = ParamPolynomial::zero();
        p.add_term(exps, coeff);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<Parameter> {
        Parameter::ALL.into_iter().filter(|p| self.terms.keys().any(|e| e[p.index()] > 0)).collect()
    }

    pub fn contains(&self, param: Parameter) -> bool {
        self.terms.keys().any(|e| e[param.index()] > 0)
    }

    pub fn degree_in(&self, param: Parameter) -> u32 {
        self.terms.keys().map(|e| e[param.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Leading term in lexicographic order on exponent vectors
    /// (parameter order `cL, cA, cLa, r, p`).
    fn leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return ParamPolynomial::zero();
        }
        ParamPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = ParamPolynomial::constant(Rational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact substitution of every parameter that occurs.
    pub fn evaluate(&self, assignment: &BTreeMap<Parameter, Rational>) -> Result<Rational, ScalarError> {
        for param in self.variables() {
            if !assignment.contains_key(&param) {
                return Err(ScalarError::MissingParameter(param.name().to_string()));
            }
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for param in Parameter::ALL {
                let k = e[param.index()];
                if k > 0 {
                    t = &t * &assignment[&param].pow(k);
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Substitute the assigned parameters and keep the others symbolic.
    pub fn specialize(&self, assignment: &BTreeMap<Parameter, Rational>) -> Self {
        let mut out = ParamPolynomial::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let mut t = c.clone();
            for (param, val) in assignment {
                let k = e[param.index()];
                if k > 0 {
                    t = &t * &val.pow(k);
                    e2[param.index()] = 0;
                }
            }
            out.add_term(e2, t);
        }
        out
    }

    pub fn derivative(&self, param: Parameter) -> Self {
        let i = param.index();
        let mut out = ParamPolynomial::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                out.add_term(e2, c * &Rational::from(e[i] as i64));
            }
        }
        out
    }

    /// Coefficients with respect to `param`: entry `k` multiplies `param^k`.
    pub fn coefficients_in(&self, param: Parameter) -> Vec<ParamPolynomial> {
        let i = param.index();
        let mut out = vec![ParamPolynomial::zero(); self.degree_in(param) as usize + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[i] = 0;
            out[e[i] as usize].add_term(e2, c.clone());
        }
        out
    }

    fn from_coefficients_in(param: Parameter, coeffs: &[ParamPolynomial]) -> Self {
        let i = param.index();
        let mut out = ParamPolynomial::zero();
        for (k, cp) in coeffs.iter().enumerate() {
            for (e, c) in &cp.terms {
                let mut e2 = *e;
                e2[i] += k as u32;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Dense univariate coefficient list (index = power). Fails when any other
    /// parameter occurs.
    pub fn to_univariate(&self, param: Parameter) -> Result<Vec<Rational>, ScalarError> {
        if self.variables().iter().any(|&v| v != param) {
            return Err(ScalarError::NotUnivariate(param.name().to_string()));
        }
        Ok(self.coefficients_in(param).into_iter().map(|c| c.as_constant().expect("constant coefficient")).collect())
    }

    pub fn from_univariate(param: Parameter, coeffs: &[Rational]) -> Self {
        let mut out = ParamPolynomial::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = [0; NUM_PARAMS];
            e[param.index()] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// The unique polynomial in `param` of degree `< points.len()` through
    /// the given `(x, y)` pairs (Newton divided differences). The `x` must be
    /// distinct.
    pub fn interpolate(param: Parameter, points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for k in 1..n {
            for i in (k..n).rev() {
                let num = &dd[i] - &dd[i - 1];
                let den = &points[i].0 - &points[i - k].0;
                dd[i] = &num / &den;
            }
        }
        // Horner on the Newton form, highest divided difference first
        let mut coeffs: Vec<Rational> = Vec::new();
        for i in (0..n).rev() {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &(c * &points[i].0);
            }
            next[0] += &dd[i];
            coeffs = next;
        }
        ParamPolynomial::from_univariate(param, &coeffs)
    }

    /// Greatest common divisor, normalized to be monic (leading coefficient 1).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return ParamPolynomial::constant(Rational::one());
        }
        let main = Parameter::ALL
            .into_iter()
            .rev()
            .find(|&p| self.contains(p) || other.contains(p))
            .expect("non-constant polynomial has a variable");
        if !self.contains(main) {
            return self.gcd(&other.content_in(main));
        }
        if !other.contains(main) {
            return self.content_in(main).gcd(other);
        }
        let ca = self.content_in(main);
        let cb = other.content_in(main);
        let g_content = ca.gcd(&cb);
        let pa = self.div_exact(&ca).expect("content divides");
        let pb = other.div_exact(&cb).expect("content divides");
        let (mut f, mut g) = if pa.degree_in(main) >= pb.degree_in(main) { (pa, pb) } else { (pb, pa) };
        loop {
            let r = f.pseudo_remainder(&g, main);
            if r.is_zero() {
                break;
            }
            if !r.contains(main) {
                return g_content;
            }
            f = g;
            g = r.primitive_part_in(main);
        }
        g.primitive_part_in(main).mul(&g_content).monic()
    }

    fn content_in(&self, param: Parameter) -> Self {
        self.coefficients_in(param).iter().fold(ParamPolynomial::zero(), |acc, c| acc.gcd(c))
    }

    fn primitive_part_in(&self, param: Parameter) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(param);
        self.div_exact(&c).expect("content divides")
    }

    /// Sparse pseudo-remainder of `self` by `divisor` with respect to `param`;
    /// a nonzero multiple of the true remainder.
    fn pseudo_remainder(&self, divisor: &Self, param: Parameter) -> Self {
        let dg = divisor.degree_in(param);
        let lc_g = divisor.coefficients_in(param).pop().expect("nonzero divisor");
        let mut r = self.clone();
        while !r.is_zero() && r.contains(param) && r.degree_in(param) >= dg {
            let dr = r.degree_in(param);
            let lc_r = r.coefficients_in(param).pop().expect("nonzero");
            let mut shift = vec![ParamPolynomial::zero(); (dr - dg) as usize + 1];
            shift[(dr - dg) as usize] = lc_r;
            let t = ParamPolynomial::from_coefficients_in(param, &shift).mul(divisor);
            r = r.mul(&lc_g).sub(&t);
        }
        r
    }

    fn fmt_monomial(e: &Exponents) -> String {
        let mut parts = Vec::new();
        for param in sorted_by_name() {
            let k = e[param.index()];
            match k {
                0 => {}
                1 => parts.push(param.name().to_string()),
                _ => parts.push(format!("{}^{}", param.name(), k)),
            }
        }
        parts.join("*")
    }

    /// Terms in print order: lexicographic by exponent over parameters sorted
    /// by name (higher powers first), ties by total degree.
    fn print_order(&self) -> Vec<(&Exponents, &Rational)> {
        let names = sorted_by_name();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let ka: Vec<u32> = names.iter().map(|p| a[p.index()]).collect();
            let kb: Vec<u32> = names.iter().map(|p| b[p.index()]).collect();
            kb.cmp(&ka).then_with(|| b.iter().sum::<u32>().cmp(&a.iter().sum::<u32>()))
        });
        v
    }
}

fn sorted_by_name() -> Vec<Parameter> {
    let mut v = Parameter::ALL.to_vec();
    v.sort_by_key(|p| p.name());
    v
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.print_order().into_iter().enumerate() {
            let mono = ParamPolynomial::fmt_monomial(e);
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else if mag.is_integer() {
                write!(f, "{}*{}", mag, mono)?;
            } else {
                write!(f, "({})*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for ParamPolynomial {
    fn zero() -> Self {
        ParamPolynomial::zero()
    }
    fn one() -> Self {
        ParamPolynomial::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = ParamPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for i in 0..NUM_PARAMS {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        ParamPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        ParamPolynomial::constant(q.clone())
    }
    fn scale(&self, q: &Rational) -> Self {
        ParamPolynomial::scale(self, q)
    }
}

impl ExactDiv for ParamPolynomial {
    /// Multivariate division in lexicographic order; exact iff the remainder
    /// vanishes.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (le, lc) = divisor.leading().map(|(e, c)| (*e, c.clone()))?;
        let mut r = self.clone();
        let mut q = ParamPolynomial::zero();
        while let Some((re, rc)) = r.leading().map(|(e, c)| (*e, c.clone())) {
            let mut e = [0; NUM_PARAMS];
            for i in 0..NUM_PARAMS {
                if re[i] < le[i] {
                    return None;
                }
                e[i] = re[i] - le[i];
            }
            let t = ParamPolynomial::monomial(&rc / &lc, e);
            r = r.sub(&t.mul(divisor));
            q = q.add(&t);
        }
        Some(q)
    }
}

/// Complete set of rational roots of `poly` viewed as a polynomial in `var`.
///
/// Real roots are isolated with a Sturm sequence and exact bisection; each
/// isolating interval is shrunk below the minimal spacing of fractions whose
/// denominators divide the leading coefficient, and the unique candidate
/// (the simplest fraction in the interval) is verified by substitution.
pub fn rational_roots_in(poly: &ParamPolynomial, var: Parameter) -> Result<BTreeSet<Rational>, ScalarError> {
    if poly.is_zero() {
        return Err(ScalarError::ZeroPolynomial);
    }
    let coeffs = poly.to_univariate(var)?;
    let mut f = UniPoly::new(coeffs);
    let mut roots = BTreeSet::new();
    if f.coeffs[0].is_zero() {
        roots.insert(Rational::zero());
        let first = f.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
        f = UniPoly::new(f.coeffs[first..].to_vec());
    }
    if f.degree() == 0 {
        return Ok(roots);
    }
    let sqfree = f.div_exact(&f.gcd(&f.derivative())).monic();
    let den_bound = sqfree.integer_leading_coefficient();
    // distinct fractions with denominators dividing `den_bound` are at least
    // 1/den_bound^2 apart
    let spacing = Rational::from_bigint(den_bound.clone() * den_bound).inv().expect("nonzero");
    let sturm = sqfree.sturm_sequence();
    let bound = sqfree.cauchy_bound();
    let mut stack = vec![(-&bound, bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm_count(&sturm, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo < spacing {
            let candidate = simplest_in(&lo, &hi);
            if sqfree.eval(&candidate).is_zero() {
                roots.insert(candidate);
            }
            continue;
        }
        let mid = (&lo + &hi) * Rational::frac(1, 2);
        if sqfree.eval(&mid).is_zero() {
            roots.insert(mid.clone());
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    Ok(roots)
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
fn sturm_count(seq: &[UniPoly], lo: &Rational, hi: &Rational) -> usize {
    let changes = |x: &Rational| {
        let signs: Vec<i32> = seq.iter().map(|p| p.eval(x).signum()).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(lo).saturating_sub(changes(hi))
}

/// Fraction with the smallest denominator in the closed interval `[lo, hi]`.
fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    let c = Rational::from_bigint(lo.ceil());
    if &c <= hi {
        return c;
    }
    let fl = Rational::from_bigint(lo.floor());
    let inner = simplest_in(&(hi - &fl).inv().expect("hi above floor"), &(lo - &fl).inv().expect("lo above floor"));
    fl + inner.inv().expect("positive")
}

/// Dense univariate polynomial used by root isolation.
#[derive(Clone, Debug, PartialEq)]
struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        UniPoly { coeffs }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    fn lead(&self) -> &Rational {
        self.coeffs.last().expect("nonempty")
    }

    fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Rational::from(k as i64)).collect())
    }

    fn monic(&self) -> UniPoly {
        let l = self.lead().inv().expect("nonzero polynomial");
        UniPoly::new(self.coeffs.iter().map(|c| c * &l).collect())
    }

    fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    fn divmod(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        if self.degree() < dd {
            return (UniPoly::new(vec![Rational::zero()]), self.clone());
        }
        let mut q = vec![Rational::zero(); self.degree() - dd + 1];
        let inv = d.lead().inv().expect("nonzero divisor");
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            if !t.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &(&t * dc);
                }
            }
            q[k] = t;
        }
        r.truncate(dd.max(1));
        (UniPoly::new(q), UniPoly::new(r))
    }

    fn div_exact(&self, d: &UniPoly) -> UniPoly {
        self.divmod(d).0
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].degree() == 0 {
                break;
            }
            let r = seq[n - 2].divmod(&seq[n - 1]).1.neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// 1 + max |a_i / a_n|: every real root lies strictly inside this bound.
    fn cauchy_bound(&self) -> Rational {
        let l = self.lead().abs();
        let m = self.coeffs[..self.degree()].iter().map(|c| (c / &l).abs()).max().unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Leading coefficient of the primitive integer multiple of `self`.
    fn integer_leading_coefficient(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        let den = super::rational::common_denominator(&self.coeffs);
        let ints: Vec<num_bigint::BigInt> =
            self.coeffs.iter().map(|c| (c * &Rational::from_bigint(den.clone())).numer().clone()).collect();
        let content = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        (ints.last().expect("nonempty") / content).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> ParamPolynomial {
        ParamPolynomial::var(Parameter::P)
    }

    fn c(n: i64) -> ParamPolynomial {
        ParamPolynomial::constant(Rational::from(n))
    }

    fn roots(poly: &ParamPolynomial) -> Vec<Rational> {
        rational_roots_in(poly, Parameter::P).unwrap().into_iter().collect()
    }

    #[test]
    fn monomial_product() {
        let cla = ParamPolynomial::var(Parameter::CLa);
        assert_eq!(cla.mul(&cla).to_string(), "cLa^2");
    }

    #[test]
    fn hpr_evaluates_to_minus_r() {
        // (1 - p^2)(cL - 3)/24 - r p at p = 1
        let cl = ParamPolynomial::var(Parameter::CL);
        let r = ParamPolynomial::var(Parameter::R);
        let h = c(1).sub(&p().mul(&p())).mul(&cl.sub(&c(3))).scale(&Rational::frac(1, 24)).sub(&r.mul(&p()));
        let mut a = BTreeMap::new();
        a.insert(Parameter::P, Rational::one());
        a.insert(Parameter::R, Rational::frac(2, 3));
        a.insert(Parameter::CL, Rational::frac(11, 2));
        assert_eq!(h.evaluate(&a).unwrap(), Rational::frac(-2, 3));
    }

    #[test]
    fn evaluate_constant_and_missing() {
        assert_eq!(c(5).evaluate(&BTreeMap::new()).unwrap(), Rational::from(5));
        let err = p().evaluate(&BTreeMap::new()).unwrap_err();
        assert!(matches!(err, ScalarError::MissingParameter(ref s) if s == "p"));
        let cla = ParamPolynomial::var(Parameter::CLa);
        let ha = cla.mul(&c(1).add(&p()));
        let mut a = BTreeMap::new();
        a.insert(Parameter::P, Rational::from(-1));
        a.insert(Parameter::CLa, Rational::frac(2, 3));
        assert_eq!(ha.evaluate(&a).unwrap(), Rational::zero());
    }

    #[test]
    fn root_examples() {
        let one_minus_p2 = c(1).sub(&p().mul(&p()));
        assert_eq!(roots(&one_minus_p2), vec![Rational::from(-1), Rational::from(1)]);
        let f = p().sub(&c(2)).pow(2).mul(&p().add(&c(2)));
        assert_eq!(roots(&f), vec![Rational::from(-2), Rational::from(2)]);
        assert!(roots(&p().mul(&p()).add(&c(1))).is_empty());
        assert!(matches!(rational_roots_in(&ParamPolynomial::zero(), Parameter::P), Err(ScalarError::ZeroPolynomial)));
    }

    #[test]
    fn fractional_and_zero_roots() {
        // p^2 (3p - 2)(5p + 7)(p^2 - 2)
        let f = p()
            .mul(&p())
            .mul(&p().scale(&Rational::from(3)).sub(&c(2)))
            .mul(&p().scale(&Rational::from(5)).add(&c(7)))
            .mul(&p().mul(&p()).sub(&c(2)));
        assert_eq!(roots(&f), vec![Rational::frac(-7, 5), Rational::zero(), Rational::frac(2, 3)]);
    }

    #[test]
    fn not_univariate_is_rejected() {
        let f = p().mul(&ParamPolynomial::var(Parameter::R));
        assert!(matches!(rational_roots_in(&f, Parameter::P), Err(ScalarError::NotUnivariate(_))));
    }

    #[test]
    fn multivariate_gcd() {
        let r = ParamPolynomial::var(Parameter::R);
        let cl = ParamPolynomial::var(Parameter::CL);
        let common = p().mul(&r).add(&cl);
        let a = common.mul(&p().sub(&c(1)));
        let b = common.mul(&r.add(&c(3))).mul(&common);
        assert_eq!(a.gcd(&b), common.monic());
        assert_eq!(p().gcd(&r), c(1));
    }

    #[test]
    fn exact_division() {
        let r = ParamPolynomial::var(Parameter::R);
        let a = p().add(&r).mul(&p().sub(&r));
        assert_eq!(a.div_exact(&p().add(&r)).unwrap(), p().sub(&r));
        assert!(a.div_exact(&p().add(&c(1))).is_none());
    }

    #[test]
    fn printing_is_deterministic() {
        let r = ParamPolynomial::var(Parameter::R);
        let f = r.mul(&p()).scale(&Rational::from(-1)).add(&p().mul(&p()).scale(&Rational::frac(1, 24))).add(&c(3));
        assert_eq!(f.to_string(), "(1/24)*p^2 - p*r + 3");
    }
}
