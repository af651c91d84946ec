//! The lattice × fermion realization: Fock modules over `v_{p,r}`, the
//! realized generators, lattice vertex operators along the isotropic
//! direction `c`, and the screening operators built from
//! `a = Ψ⁻(-1/2) e^{c/2}`.
//!
//! Fermions are rescaled to `φ^± = √2 Ψ^±` so every coefficient is
//! rational; `a`, `Q` carry the same factor `√2`.

mod checks;
mod fock;
mod realized;
mod screening;
#[cfg(test)]
mod tests;

pub use checks::{
    check_a_anticommute, check_q_commutes, check_q_squared, check_realization, check_screening_commutes, fock_dims,
    kernel_q, kernel_q_g_dims, realized_span_dims, CheckOutcome,
};
pub use fock::{free_mode_act, FockMonomial, FockVector, FreeField, LatticePoint};
pub use realized::{Realization, RealizedField};
pub use screening::{a_mode, lattice_exp_act, screening_g, screening_q, screening_s};

use crate::scalars::Rational;
use crate::verma::{sing_nep, sing_par, subsing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeFieldError {
    #[error("parity mismatch: {0}")]
    Parity(String),
    #[error("index outside the admissible coset: {0}")]
    Coset(String),
    #[error("cLa must be nonzero")]
    ZeroCLa,
    #[error("needs {expected}, got p = {p}")]
    WrongP { expected: &'static str, p: i64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Singular,
    Subsingular,
}

fn odd_positive(p: i64) -> Result<(), FreeFieldError> {
    if p > 0 && p % 2 == 1 {
        Ok(())
    } else {
        Err(FreeFieldError::WrongP { expected: "odd p > 0", p })
    }
}

fn even_positive(p: i64) -> Result<(), FreeFieldError> {
    if p > 0 && p % 2 == 0 {
        Ok(())
    } else {
        Err(FreeFieldError::WrongP { expected: "even p > 0", p })
    }
}

impl Realization {
    /// `Σ_i Ψ(-i-1/2) S_{(p-1)/2-i}(-α/(2c_{L,α})) v_{p,r}` for odd `p > 0`.
    pub fn build_singular_odd(&self, p: i64, r: &Rational) -> Result<FockVector, FreeFieldError> {
        odd_positive(p)?;
        let x = sing_nep(p, self.cla()).map_err(|_| FreeFieldError::ZeroCLa)?;
        Ok(self.realize_element(&x, &Rational::from(p), r))
    }

    /// The subsingular vector of weight `p` for odd `p > 0`, realized.
    pub fn build_subsingular_odd(&self, p: i64, r: &Rational) -> Result<FockVector, FreeFieldError> {
        odd_positive(p)?;
        let x = subsing(p, self.cla()).map_err(|_| FreeFieldError::ZeroCLa)?;
        Ok(self.realize_element(&x, &Rational::from(p), r))
    }

    /// The singular vector of weight `p` for even `p > 0`, realized.
    pub fn build_singular_even(&self, p: i64, r: &Rational) -> Result<FockVector, FreeFieldError> {
        even_positive(p)?;
        let x = sing_par(p, self.cla()).map_err(|_| FreeFieldError::ZeroCLa)?;
        Ok(self.realize_element(&x, &Rational::from(p), r))
    }

    /// Screening families in `F_{p,r}`:
    ///
    /// * odd `p`: `u^{(n)} = 𝒢ⁿ Q v_{p,r-n-1/2}`, `w^{(n)} = 𝒢ⁿ v_{p,r-n}` (n ≥ 1);
    /// * even `p`: `u^{(n)} = (𝒢^tw)ⁿ v_{p,r-n}`.
    pub fn family_vector(&self, p: i64, r: &Rational, n: u32, kind: FamilyKind) -> Result<FockVector, FreeFieldError> {
        let pq = Rational::from(p);
        let nq = Rational::from(n as i64);
        if p % 2 == 0 {
            even_positive(p)?;
            if kind == FamilyKind::Subsingular {
                return Err(FreeFieldError::WrongP { expected: "odd p for subsingular families", p });
            }
            let mut v = self.v_pr(&pq, &(r - &nq));
            for _ in 0..n {
                v = screening_g(&v, true)?;
            }
            return Ok(v);
        }
        odd_positive(p)?;
        let mut v = match kind {
            FamilyKind::Singular => screening_q(&self.v_pr(&pq, &(&(r - &nq) - &Rational::frac(1, 2))))?,
            FamilyKind::Subsingular => {
                if n == 0 {
                    return Err(FreeFieldError::WrongP { expected: "n ≥ 1 for subsingular families", p });
                }
                self.v_pr(&pq, &(r - &nq))
            }
        };
        for _ in 0..n {
            v = screening_g(&v, false)?;
        }
        Ok(v)
    }
}
