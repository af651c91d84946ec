//! Highest-weight modules: PBW bases, the module action, the contravariant
//! form, singular and subsingular vectors, and the explicit formulas.

mod basis;
mod det;
mod diagram;
mod formulas;
mod module;
mod singular;

pub use basis::{GradedBasis, WordShape};
pub use det::{
    det_formula_phi, det_vanishing_check, predicted_roots, symbolic_gram_determinant,
    symbolic_gram_determinant_bareiss, DetReport,
};
pub use diagram::{embedding_diagram, Diagram, DiagramEdge, DiagramNode, NodeKind};
pub use formulas::{phi_operator, phi_operator_as_printed, schur_alpha, sing_nep, sing_par, subsing, FormulaError};
pub use module::{ModuleVector, VermaModule};
pub use singular::{normalize_leading, refine_representative, singular_vectors, subsingular_vectors, Submodule};

use serde::{Deserialize, Serialize};

use crate::scalars::{Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    #[error("hA = cLa: the p = 0 family has h = (cL-3)/24 for every r, so (p, r) is not determined")]
    DegenerateP,
    #[error("cLa must be nonzero")]
    ZeroCLa,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("{0} is not a basis word")]
    NotBasisWord(String),
    #[error("submodule generator has degree {0}, above the truncation")]
    AboveTruncation(crate::algebra::Half),
}

/// Central charges and highest weight `(h, h_α)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HighestWeight<R> {
    pub cl: R,
    pub ca: R,
    pub cla: R,
    pub h: R,
    pub ha: R,
}

/// The labels `(p, r)` with `h = h_{p,r}`, `h_α = (1+p) c_{L,α}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrLabel<R> {
    pub p: R,
    pub r: R,
}

/// `h_{p,r} = (1 - p²)(c_L - 3)/24 - r p`.
pub fn h_pr<R: Ring>(p: &R, r: &R, cl: &R) -> R {
    let one = R::one();
    let factor = cl.sub(&R::from_int(3)).scale(&Rational::frac(1, 24));
    one.sub(&p.mul(p)).mul(&factor).sub(&r.mul(p))
}

/// Highest weight of `V[p, r]` at level zero.
pub fn pr_to_hw<R: Ring>(p: &R, r: &R, cl: &R, cla: &R) -> HighestWeight<R> {
    HighestWeight { cl: cl.clone(), ca: R::zero(), cla: cla.clone(), h: h_pr(p, r, cl), ha: R::one().add(p).mul(cla) }
}

pub fn hw_to_pr<R: Field>(hw: &HighestWeight<R>) -> Result<PrLabel<R>, VermaError> {
    if hw.cla.is_zero() {
        return Err(VermaError::ZeroCLa);
    }
    let p = hw.ha.div(&hw.cla).expect("nonzero").sub(&R::one());
    if p.is_zero() {
        return Err(VermaError::DegenerateP);
    }
    let zero = R::zero();
    let r = h_pr(&p, &zero, &hw.cl).sub(&hw.h).div(&p).expect("nonzero");
    Ok(PrLabel { p, r })
}

#[cfg(test)]
mod tests;
