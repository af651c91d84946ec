use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::fock::{apply_mode, mode_on_monomial, FockMonomial, FockVector, FreeField, LatticePoint};
use super::FreeFieldError;
use crate::algebra::{Element, Gen, Half, Kind};
use crate::scalars::Rational;

/// The realized fields, with `φ^± = √2 Ψ^±` so every coefficient is
/// rational:
///
/// * `α = -c_{L,α} c(-1)`, `Ψ = -c_{L,α} φ⁻(-1/2)`;
/// * `τ = ½:cφ⁺: + ½:dφ⁻: + ((c_L-3)/12) ∂φ⁻ - ∂φ⁺`;
/// * `ω = ½:cd: + ((c_L-3)/24) ∂c - ½ ∂d + ¼:∂φ⁺ φ⁻: + ¼:∂φ⁻ φ⁺:`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RealizedField {
    Alpha,
    Tau,
    Omega,
    Psi,
}

impl RealizedField {
    pub fn kind(self) -> Kind {
        match self {
            RealizedField::Alpha => Kind::A,
            RealizedField::Tau => Kind::G,
            RealizedField::Omega => Kind::L,
            RealizedField::Psi => Kind::P,
        }
    }
}

type Cache = RwLock<HashMap<(Gen, LatticePoint, FockMonomial), Arc<FockVector>>>;

/// The free-field realization at fixed central charges `c_L`, `c_{L,α}`
/// (and `c_α = 0`).
pub struct Realization {
    cl: Rational,
    cla: Rational,
    cache: Cache,
}

impl Realization {
    pub fn new(cl: Rational, cla: Rational) -> Result<Self, FreeFieldError> {
        if cla.is_zero() {
            return Err(FreeFieldError::ZeroCLa);
        }
        Ok(Realization { cl, cla, cache: RwLock::new(HashMap::new()) })
    }

    pub fn cl(&self) -> &Rational {
        &self.cl
    }

    pub fn cla(&self) -> &Rational {
        &self.cla
    }

    /// Sector of `v_{p,r}`.
    pub fn sector(&self, p: &Rational, r: &Rational) -> LatticePoint {
        LatticePoint::v_pr(p, r, &self.cl)
    }

    pub fn v_pr(&self, p: &Rational, r: &Rational) -> FockVector {
        FockVector::vacuum(self.sector(p, r))
    }

    /// Scalar by which a central element acts.
    pub fn central_value(&self, k: Kind) -> Rational {
        match k {
            Kind::CL => self.cl.clone(),
            Kind::CLA => self.cla.clone(),
            _ => Rational::zero(),
        }
    }

    /// `realized_act`: the mode `mode` of a realized field.
    pub fn realized_act(&self, f: RealizedField, mode: Half, v: &FockVector) -> Result<FockVector, FreeFieldError> {
        let g =
            Gen::new(f.kind(), mode.twice()).ok_or_else(|| FreeFieldError::Parity(format!("{f:?} at mode {mode}")))?;
        Ok(self.act_gen(g, v))
    }

    /// A generator of SH acting on a Fock vector.
    pub fn act_gen(&self, g: Gen, v: &FockVector) -> FockVector {
        if g.kind.is_central() {
            return v.scale(&self.central_value(g.kind));
        }
        let mut out = FockVector::zero(v.sector.clone());
        for (m, c) in &v.terms {
            let img = self.on_monomial(g, &v.sector, m);
            for (m2, c2) in &img.terms {
                out.add_term(m2.clone(), c * c2);
            }
        }
        out
    }

    fn on_monomial(&self, g: Gen, sector: &LatticePoint, m: &FockMonomial) -> Arc<FockVector> {
        let key = (g, sector.clone(), m.clone());
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let v = FockVector::monomial(sector.clone(), m.clone());
        let img = Arc::new(self.compute(g, &v));
        self.cache.write().expect("cache lock").insert(key, img.clone());
        img
    }

    fn compute(&self, g: Gen, v: &FockVector) -> FockVector {
        use FreeField::*;
        let t = g.twice;
        let top = v.max_twice_degree();
        let mut out = FockVector::zero(v.sector.clone());
        let q = Rational::frac;
        match g.kind {
            Kind::A => out = apply_mode(C, t, v).scale(&-&self.cla),
            Kind::P => out = apply_mode(PsiMinus, t, v).scale(&-&self.cla),
            Kind::L => {
                let m = t / 2;
                for a in (t - top..=top).filter(|a| a % 2 == 0) {
                    bilinear(&mut out, &q(1, 2), C, a, D, t - a, v);
                }
                let k3 = &(&self.cl - &Rational::from(3)) * &q(-(m as i64) - 1, 24);
                out = out.add(&apply_mode(C, t, v).scale(&k3));
                out = out.add(&apply_mode(D, t, v).scale(&q(m as i64 + 1, 2)));
                for s in (t - top..=top).filter(|s| s.rem_euclid(2) == 1) {
                    // (∂φ)(s) = (-s-1/2) φ(s)
                    let w = q(-(s as i64) - 1, 8);
                    bilinear(&mut out, &w, PsiPlus, s, PsiMinus, t - s, v);
                    bilinear(&mut out, &w, PsiMinus, s, PsiPlus, t - s, v);
                }
            }
            Kind::G => {
                for a in (t - top..=top).filter(|a| a % 2 == 0) {
                    bilinear(&mut out, &q(1, 2), C, a, PsiPlus, t - a, v);
                    bilinear(&mut out, &q(1, 2), D, a, PsiMinus, t - a, v);
                }
                let d = q(-(t as i64) - 1, 2);
                let k = &(&(&self.cl - &Rational::from(3)) * &q(1, 12)) * &d;
                out = out.add(&apply_mode(PsiMinus, t, v).scale(&k));
                out = out.add(&apply_mode(PsiPlus, t, v).scale(&-&d));
            }
            _ => unreachable!("centrals handled by act_gen"),
        }
        out
    }

    /// Applies a PBW word, rightmost factor first.
    pub fn act_word(&self, word: &[Gen], v: &FockVector) -> FockVector {
        word.iter().rev().fold(v.clone(), |acc, &g| self.act_gen(g, &acc))
    }

    pub fn act_element(&self, x: &Element<Rational>, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(v.sector.clone());
        for (w, c) in x.terms() {
            out = out.add(&self.act_word(w, v).scale(c));
        }
        out
    }

    /// `realize_element`: `x·v_{p,r}` in `F_{p,r}`.
    pub fn realize_element(&self, x: &Element<Rational>, p: &Rational, r: &Rational) -> FockVector {
        self.act_element(x, &self.v_pr(p, r))
    }
}

/// Adds `coef·:X(a)Y(b):v` to `out`; the factor with the larger mode acts
/// first.
fn bilinear(out: &mut FockVector, coef: &Rational, x: FreeField, a: i32, y: FreeField, b: i32, v: &FockVector) {
    let (first, fa, second, sb, sgn) =
        if a <= b { (y, b, x, a, 1) } else { (x, a, y, b, if x.is_odd() && y.is_odd() { -1 } else { 1 }) };
    let coef = coef * &Rational::from(sgn);
    for (m, c) in &v.terms {
        let Some((m1, k1)) = mode_on_monomial(first, fa, &v.sector, m) else {
            continue;
        };
        let Some((m2, k2)) = mode_on_monomial(second, sb, &v.sector, &m1) else {
            continue;
        };
        out.add_term(m2, &(&(c * &k1) * &k2) * &coef);
    }
}
