use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use super::{pr_to_hw, HighestWeight, VermaError, VermaModule};
use crate::algebra::Half;
use crate::linalg::{determinant, rational_determinant, Matrix};
use crate::scalars::{rational_roots_in, Field, ParamPolynomial, Parameter, Rational};

/// `φ_{k,l} = (c_{L,α}⁴/4)(1+k-x)(-1+k+x)(1+l-x)(-1+l+x)` with
/// `x = h_α / c_{L,α}`.
pub fn det_formula_phi<F: Field>(k: u32, l: u32, hw: &HighestWeight<F>) -> Result<F, VermaError> {
    assert!(k >= 1 && l >= 1 && k % 2 == l % 2, "need k, l >= 1 of equal parity");
    let x = hw.ha.div(&hw.cla).map_err(|_| VermaError::ZeroCLa)?;
    let one = F::one();
    let (k, l) = (F::from_int(k as i64), F::from_int(l as i64));
    let c2 = hw.cla.mul(&hw.cla);
    let mut out = c2.mul(&c2).scale(&Rational::frac(1, 4));
    for f in [one.add(&k).sub(&x), k.sub(&one).add(&x), one.add(&l).sub(&x), l.sub(&one).add(&x)] {
        out = out.mul(&f);
    }
    Ok(out)
}

/// Values of `p` where some `φ_{k,l}` with `k, l ≥ 1`, `kl ≤ 2·level`,
/// `k ≡ l (mod 2)` vanishes (`x = 1 + p`): `p = ±k, ±l`.
pub fn predicted_roots(level: Half) -> BTreeSet<Rational> {
    let n = level.0.max(0) as u32;
    let mut out = BTreeSet::new();
    for k in 1..=n {
        for l in 1..=n / k {
            if k % 2 == l % 2 {
                for v in [k, l] {
                    out.insert(Rational::from(v as i64));
                    out.insert(Rational::from(-(v as i64)));
                }
            }
        }
    }
    out
}

/// Gram determinant at `level` as a polynomial in `p`, other parameters
/// fixed.
///
/// The polynomial Gram matrix is built once; its determinant is then
/// interpolated from exact rational determinants at integer values of `p`,
/// as many as the row-degree bound requires.
pub fn symbolic_gram_determinant(level: Half, cl: &Rational, cla: &Rational, r: &Rational) -> ParamPolynomial {
    let gram = symbolic_gram(level, cl, cla, r);
    let n = gram.rows();
    let row_bound: u32 = (0..n).map(|i| gram.row(i).iter().map(|e| e.degree_in(Parameter::P)).max().unwrap_or(0)).sum();
    let col_bound: u32 =
        (0..n).map(|j| (0..n).map(|i| gram.get(i, j).degree_in(Parameter::P)).max().unwrap_or(0)).sum();
    let bound = row_bound.min(col_bound) as i64;
    let values: Vec<(Rational, Rational)> = (0..=bound)
        .into_par_iter()
        .map(|k| {
            let x = Rational::from(k - bound / 2);
            let at = BTreeMap::from([(Parameter::P, x.clone())]);
            let g = gram.map(|e| e.evaluate(&at).expect("univariate in p"));
            (x, rational_determinant(&g).expect("square"))
        })
        .collect();
    ParamPolynomial::interpolate(Parameter::P, &values)
}

/// The same determinant by fraction-free elimination over polynomials.
pub fn symbolic_gram_determinant_bareiss(level: Half, cl: &Rational, cla: &Rational, r: &Rational) -> ParamPolynomial {
    determinant(&symbolic_gram(level, cl, cla, r)).expect("square")
}

fn symbolic_gram(level: Half, cl: &Rational, cla: &Rational, r: &Rational) -> Matrix<ParamPolynomial> {
    let c = ParamPolynomial::constant;
    let hw = pr_to_hw(&ParamPolynomial::var(Parameter::P), &c(r.clone()), &c(cl.clone()), &c(cla.clone()));
    VermaModule::new(hw).gram(level)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DetReport {
    pub level: Half,
    pub degree_in_p: u32,
    pub computed: BTreeSet<Rational>,
    pub predicted: BTreeSet<Rational>,
}

impl DetReport {
    pub fn pass(&self) -> bool {
        self.computed == self.predicted
    }
}

impl fmt::Display for DetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &BTreeSet<Rational>| s.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "level {}: det has degree {} in p, rational roots {{{}}}, predicted {{{}}}",
            self.level,
            self.degree_in_p,
            show(&self.computed),
            show(&self.predicted)
        )
    }
}

/// Compares the rational roots in `p` of the Gram determinant with
/// [`predicted_roots`]. Set equality only; multiplicities are not compared.
pub fn det_vanishing_check(level: Half, cl: &Rational, cla: &Rational, r: &Rational) -> DetReport {
    let det = symbolic_gram_determinant(level, cl, cla, r);
    let computed =
        if det.is_zero() { BTreeSet::new() } else { rational_roots_in(&det, Parameter::P).expect("univariate in p") };
    DetReport { level, degree_in_p: det.degree_in(Parameter::P), computed, predicted: predicted_roots(level) }
}
