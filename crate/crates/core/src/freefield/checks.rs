use std::collections::BTreeMap;

use rayon::prelude::*;

use super::fock::{FockMonomial, FockVector, LatticePoint};
use super::realized::Realization;
use super::screening::{a_mode, screening_g, screening_q};
use super::FreeFieldError;
use crate::algebra::{generators_up_to, koszul, Brackets, Gen, Half};
use crate::linalg::{kernel_basis, rank, Matrix};
use crate::scalars::Rational;
use crate::verma::{pr_to_hw, VermaModule};

/// Result of an exhaustive operator identity check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: CheckOutcome) -> CheckOutcome {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

/// Graded dimensions of a Fock module, degrees `0, 1/2, …, max_degree`.
pub fn fock_dims(max_degree: Half) -> Vec<(Half, usize)> {
    max_degree.steps_up_to().map(|d| (d, FockMonomial::all_of_degree(d).len())).collect()
}

fn basis_vectors(sector: &LatticePoint, max_degree: Half) -> Vec<FockVector> {
    max_degree
        .steps_up_to()
        .flat_map(FockMonomial::all_of_degree)
        .map(|m| FockVector::monomial(sector.clone(), m))
        .collect()
}

fn non_central(bound_twice: i32) -> Vec<Gen> {
    generators_up_to(bound_twice).into_iter().filter(|g| !g.kind.is_central()).collect()
}

/// For all realized generators `x, y` with `|2·mode| ≤ bound_twice`, compares
/// `[x, y]` computed on Fock monomials of degree `≤ max_degree` with the
/// bracket table evaluated in the realization.
pub fn check_realization<B: Brackets>(
    real: &Realization,
    brackets: &B,
    sectors: &[LatticePoint],
    max_degree: Half,
    bound_twice: i32,
) -> CheckOutcome {
    let gens = non_central(bound_twice);
    let mut pairs = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i..] {
            pairs.push((x, y));
        }
    }
    let vectors: Vec<FockVector> = sectors.iter().flat_map(|s| basis_vectors(s, max_degree)).collect();
    pairs
        .par_iter()
        .map(|&(x, y)| {
            let mut out = CheckOutcome::default();
            let bracket = brackets.bracket(x, y);
            let sign = Rational::from(koszul(x, y));
            for w in &vectors {
                let xy = real.act_gen(x, &real.act_gen(y, w));
                let yx = real.act_gen(y, &real.act_gen(x, w));
                let lhs = xy.sub(&yx.scale(&sign));
                let mut rhs = FockVector::zero(w.sector.clone());
                for (g, c) in &bracket {
                    rhs = rhs.add(&real.act_gen(*g, w).scale(c));
                }
                out.record(lhs == rhs, || format!("[{x}, {y}] on {w}: {lhs} vs {rhs}"));
            }
            out
        })
        .reduce(CheckOutcome::default, CheckOutcome::merge)
}

/// `Q² = 0` on all monomials up to `max_degree` of an untwisted sector.
pub fn check_q_squared(sector: &LatticePoint, max_degree: Half) -> Result<CheckOutcome, FreeFieldError> {
    let mut out = CheckOutcome::default();
    for w in basis_vectors(sector, max_degree) {
        let qq = screening_q(&screening_q(&w)?)?;
        out.record(qq.is_zero(), || format!("Q² on {w} = {qq}"));
    }
    Ok(out)
}

/// `{a_m, a_n} = 0` for admissible `m, n` with `|2m|, |2n| ≤ bound_twice`.
pub fn check_a_anticommute(
    sector: &LatticePoint,
    max_degree: Half,
    bound_twice: i32,
) -> Result<CheckOutcome, FreeFieldError> {
    let xd = &sector.coeff_d;
    let modes: Vec<Rational> =
        (-bound_twice..=bound_twice).map(|t| Rational::frac(t as i64, 2)).filter(|m| (m + xd).is_integer()).collect();
    let mut out = CheckOutcome::default();
    for w in basis_vectors(sector, max_degree) {
        for (i, m) in modes.iter().enumerate() {
            for n in &modes[i..] {
                let mn = a_mode(m, &a_mode(n, &w)?)?;
                let nm = a_mode(n, &a_mode(m, &w)?)?;
                let s = mn.add(&nm);
                out.record(s.is_zero(), || format!("{{a_{m}, a_{n}}} on {w} = {s}"));
            }
        }
    }
    Ok(out)
}

/// `Q x - (-1)^{|x|} x Q = 0` for realized generators `x`.
pub fn check_q_commutes(
    real: &Realization,
    sector: &LatticePoint,
    max_degree: Half,
    bound_twice: i32,
) -> Result<CheckOutcome, FreeFieldError> {
    let gens = non_central(bound_twice);
    let mut out = CheckOutcome::default();
    for w in basis_vectors(sector, max_degree) {
        let qw = screening_q(&w)?;
        for &x in &gens {
            let sign = Rational::from(if x.is_odd() { -1 } else { 1 });
            let lhs = screening_q(&real.act_gen(x, &w))?;
            let rhs = real.act_gen(x, &qw).scale(&sign);
            out.record(lhs == rhs, || format!("[Q, {x}] on {w}"));
        }
    }
    Ok(out)
}

/// Row-indexes the monomials of several vectors (possibly in different
/// sectors) and returns the kernel of the map `e_i ↦ images[i]`.
pub(crate) fn kernel_of_images(images: &[Vec<FockVector>]) -> Vec<Vec<Rational>> {
    let mut rows: BTreeMap<(usize, FockMonomial), usize> = BTreeMap::new();
    for imgs in images {
        for (k, v) in imgs.iter().enumerate() {
            for m in v.terms.keys() {
                let next = rows.len();
                rows.entry((k, m.clone())).or_insert(next);
            }
        }
    }
    let n = images.len();
    let mut mat: Matrix<Rational> = Matrix::zeros(rows.len(), n);
    for (j, imgs) in images.iter().enumerate() {
        for (k, v) in imgs.iter().enumerate() {
            for (m, c) in &v.terms {
                mat.set(rows[&(k, m.clone())], j, c.clone());
            }
        }
    }
    if rows.is_empty() {
        return (0..n).map(|j| (0..n).map(|i| Rational::from((i == j) as i64)).collect()).collect();
    }
    kernel_basis(&mat)
}

fn combine(basis: &[FockVector], coords: &[Rational], sector: &LatticePoint) -> FockVector {
    let mut v = FockVector::zero(sector.clone());
    for (b, c) in basis.iter().zip(coords) {
        v = v.add(&b.scale(c));
    }
    v
}

/// Kernel of `Q` on the degree-`d` component of an untwisted sector.
pub fn kernel_q(sector: &LatticePoint, d: Half) -> Result<Vec<FockVector>, FreeFieldError> {
    let basis: Vec<FockVector> =
        FockMonomial::all_of_degree(d).into_iter().map(|m| FockVector::monomial(sector.clone(), m)).collect();
    let images = basis.iter().map(|b| Ok(vec![screening_q(b)?])).collect::<Result<Vec<_>, FreeFieldError>>()?;
    Ok(kernel_of_images(&images).iter().map(|k| combine(&basis, k, sector)).collect())
}

/// `dim (Ker Q ∩ Ker 𝒢)` on each graded component up to `max_degree`.
pub fn kernel_q_g_dims(sector: &LatticePoint, max_degree: Half) -> Result<Vec<(Half, usize)>, FreeFieldError> {
    max_degree
        .steps_up_to()
        .map(|d| {
            let images = FockMonomial::all_of_degree(d)
                .into_iter()
                .map(|m| {
                    let b = FockVector::monomial(sector.clone(), m);
                    Ok(vec![screening_q(&b)?, screening_g(&b, false)?])
                })
                .collect::<Result<Vec<_>, FreeFieldError>>()?;
            Ok((d, kernel_of_images(&images).len()))
        })
        .collect()
}

/// `[𝒢, x] = 0` for realized generators `x`: on `Ker Q` for the untwisted
/// operator, on the whole sector for the twisted one. The untwisted case
/// also checks `[Q, 𝒢] = 0` on every monomial.
pub fn check_screening_commutes(
    real: &Realization,
    sector: &LatticePoint,
    max_degree: Half,
    bound_twice: i32,
    twisted: bool,
) -> Result<CheckOutcome, FreeFieldError> {
    let gens = non_central(bound_twice);
    let mut out = CheckOutcome::default();
    for d in max_degree.steps_up_to() {
        let domain = if twisted {
            FockMonomial::all_of_degree(d).into_iter().map(|m| FockVector::monomial(sector.clone(), m)).collect()
        } else {
            kernel_q(sector, d)?
        };
        let parts: Vec<CheckOutcome> = domain
            .par_iter()
            .map(|w| {
                let mut o = CheckOutcome::default();
                let gw = screening_g(w, twisted)?;
                for &x in &gens {
                    let lhs = screening_g(&real.act_gen(x, w), twisted)?;
                    let rhs = real.act_gen(x, &gw);
                    o.record(lhs == rhs, || format!("[𝒢, {x}] on {w}"));
                }
                Ok(o)
            })
            .collect::<Result<_, FreeFieldError>>()?;
        out = parts.into_iter().fold(out, CheckOutcome::merge);
        if !twisted {
            for m in FockMonomial::all_of_degree(d) {
                let w = FockVector::monomial(sector.clone(), m);
                let a = screening_q(&screening_g(&w, false)?)?;
                let b = screening_g(&screening_q(&w)?, false)?;
                out.record(a == b, || format!("[Q, 𝒢] on {w}"));
            }
        }
    }
    Ok(out)
}

/// Graded dimensions of `U(SH)·v_{p,r}` inside `F_{p,r}`: the rank of the
/// realized PBW monomials at each degree.
pub fn realized_span_dims(real: &Realization, p: &Rational, r: &Rational, max_degree: Half) -> Vec<(Half, usize)> {
    let m = VermaModule::new(pr_to_hw(p, r, real.cl(), real.cla()));
    let v = real.v_pr(p, r);
    max_degree
        .steps_up_to()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&d| {
            let basis = FockMonomial::all_of_degree(d);
            let cols: Vec<Vec<Rational>> =
                m.basis(d).words().iter().map(|w| real.act_word(w, &v).coords(&basis)).collect();
            (d, rank(&Matrix::from_columns(basis.len(), &cols).expect("equal lengths")))
        })
        .collect()
}
