use super::fock::{apply_mode, FockMonomial, FockVector, FreeField};
use super::FreeFieldError;
use crate::algebra::Partition;
use crate::scalars::Rational;

fn z_factor(mu: &Partition) -> Rational {
    let mut z = Rational::one();
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let mut mult = 0;
        while i < parts.len() && parts[i] == k {
            mult += 1;
            i += 1;
        }
        for j in 1..=mult {
            z = &z * &Rational::from((k as i64) * (j as i64));
        }
    }
    z
}

/// `lattice_exp_act`: the mode `e^β_(n)` of the lattice vertex operator with
/// `β = k_half·c/2`, where `Y(e^β, z) = Σ_n e^β_(n) z^{-n-1}`.
///
/// On a sector `γ` the powers of `z` lie in `⟨β, γ⟩ + ℤ`, so `n` must lie in
/// `-⟨β, γ⟩ + ℤ`. The annihilation exponential shifts `d(-m)` by
/// `-k_half·w^m`; the creation exponential is a Schur polynomial in
/// `(k_half/2)·c(-m)`.
pub fn lattice_exp_act(k_half: i64, n: &Rational, v: &FockVector) -> Result<FockVector, FreeFieldError> {
    let t = &Rational::from(k_half) * &v.sector.coeff_d;
    let base = n + &t;
    if !base.is_integer() {
        return Err(FreeFieldError::Coset(format!(
            "e^({k_half}c/2) mode {n} on sector with x_d = {}",
            v.sector.coeff_d
        )));
    }
    let base = base.to_i64().expect("small index");
    let mut out = FockVector::zero(v.sector.shifted(k_half));
    let minus_k = Rational::from(-k_half);
    let half_k = Rational::frac(k_half, 2);
    for (m, c) in &v.terms {
        let len = m.d_part.len();
        for mask in 0u32..(1u32 << len) {
            let mut rest = Vec::new();
            let mut l = 0i64;
            for (i, &part) in m.d_part.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    l += part as i64;
                } else {
                    rest.push(part);
                }
            }
            let j = l - base - 1;
            if j < 0 {
                continue;
            }
            let picked = mask.count_ones();
            let head = c * &minus_k.pow(picked);
            for mu in Partition::all_of(j as i32, 1, j as i32) {
                let coeff = &(&head * &half_k.pow(mu.len() as u32)) / &z_factor(&mu);
                if coeff.is_zero() {
                    continue;
                }
                let mut cp = m.c_part.clone();
                cp.extend_from_slice(mu.parts());
                cp.sort_unstable_by(|a, b| b.cmp(a));
                let mono = FockMonomial {
                    psi_plus: m.psi_plus.clone(),
                    psi_minus: m.psi_minus.clone(),
                    d_part: rest.clone(),
                    c_part: cp,
                };
                out.add_term(mono, coeff);
            }
        }
    }
    Ok(out)
}

/// `a_mode`: the mode `a_n` of `a = φ⁻(-1/2) e^{c/2}`, with
/// `Y(a, z) = Σ_n a_n z^{-n-1}`; `n` lies in `-x_d + ℤ`.
///
/// With `φ⁻ = √2 Ψ⁻` this is `√2` times the screening current built from
/// `Ψ⁻(-1/2) e^{c/2}`.
pub fn a_mode(n: &Rational, v: &FockVector) -> Result<FockVector, FreeFieldError> {
    let xd = &v.sector.coeff_d;
    if !(n + xd).is_integer() {
        return Err(FreeFieldError::Coset(format!("a_{n} on sector with x_d = {xd}")));
    }
    let mut out = FockVector::zero(v.sector.shifted(1));
    let top = v.max_twice_degree();
    // the fermion mode r obeys r ≤ top/2 and r ≥ n + 1/2 + x_d - top/2
    let low = (&(&(n + xd) * &Rational::from(2)) + &Rational::one()).to_i64().expect("small") as i32 - top;
    let mut r = low - 2;
    if r.rem_euclid(2) == 0 {
        r -= 1;
    }
    while r <= top.max(1) {
        let e_index = &(n - &Rational::frac(r as i64, 2)) - &Rational::frac(1, 2);
        let w = lattice_exp_act(1, &e_index, v)?;
        if !w.is_zero() {
            out = out.add(&apply_mode(FreeField::PsiMinus, r, &w));
        }
        r += 2;
    }
    Ok(out)
}

/// `screening_Q`: `Q = a_0`, defined on untwisted sectors.
pub fn screening_q(v: &FockVector) -> Result<FockVector, FreeFieldError> {
    a_mode(&Rational::zero(), v)
}

/// `screening_S`: `S = ½ Σ_{i>0} (1/i) a_{-i} a_i` on untwisted sectors,
/// `S^tw = ½ Σ_{i≥0} (1/(i+1/2)) a_{-i-1/2} a_{i+1/2}` on twisted ones (the
/// `½` compensates the `√2` in each `a`).
pub fn screening_s(v: &FockVector, twisted: bool) -> Result<FockVector, FreeFieldError> {
    let xd = &v.sector.coeff_d;
    if xd.is_integer() == twisted {
        let which = if twisted { "twisted" } else { "untwisted" };
        return Err(FreeFieldError::Coset(format!("{which} screening on sector with x_d = {xd}")));
    }
    let mut out = FockVector::zero(v.sector.shifted(2));
    let top = Rational::frac(v.max_twice_degree() as i64, 2);
    // a_i lowers the degree by i + x_d + 1/2
    let bound = &(&top - xd) - &Rational::frac(1, 2);
    let mut i = if twisted { Rational::frac(1, 2) } else { Rational::one() };
    while i <= bound {
        let inner = a_mode(&i, v)?;
        if !inner.is_zero() {
            let outer = a_mode(&-&i, &inner)?;
            out = out.add(&outer.scale(&(&Rational::frac(1, 2) / &i)));
        }
        i = &i + &Rational::one();
    }
    Ok(out)
}

/// `screening_G`: `𝒢 = e^c_0 - S` (or `e^c_0 - S^tw`).
pub fn screening_g(v: &FockVector, twisted: bool) -> Result<FockVector, FreeFieldError> {
    let e = lattice_exp_act(2, &Rational::zero(), v)?;
    Ok(e.sub(&screening_s(v, twisted)?))
}
