use crate::algebra::{Element, Gen};
use crate::qchar::schur_expand;
use crate::scalars::{Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("formula needs {expected}, got p = {p}")]
    WrongP { expected: &'static str, p: i64 },
    #[error("cLa must be nonzero")]
    ZeroCLa,
}

/// `S_r(scale·α)` as an element of U(SH): every `x(-n)` becomes
/// `scale·α(-n)`.
pub fn schur_alpha<R: Ring>(r: i64, scale: &R) -> Element<R> {
    let mut e = Element::zero();
    for (mu, c) in schur_expand(r, scale) {
        let word: Vec<Gen> = mu.parts().iter().map(|&k| Gen::a(-k)).collect();
        e = e.add(&Element::word(&word, c));
    }
    e
}

fn inv<F: Field>(x: &F) -> Result<F, FormulaError> {
    x.inv().map_err(|_| FormulaError::ZeroCLa)
}

/// `Σ_i Ψ(m_i) S_{j_i}(-α/(2c_{L,α}))` over the pairs with `Ψ` lowering;
/// `twice_mode(i)` gives twice the Ψ mode for summation index `i`, and
/// `j` is the Schur index. Terms with a raising `Ψ` annihilate the
/// highest-weight vector at level zero and are dropped.
fn psi_schur_sum<F: Field>(twice_mode: impl Fn(i64) -> i64, scale: &F) -> Element<F> {
    let mut e = Element::zero();
    let mut i = 0;
    loop {
        let t = twice_mode(i);
        if t > 0 {
            break;
        }
        let psi = Element::generator(Gen::p(t as i32));
        e = e.add(&psi.mul(&schur_alpha(i, scale)));
        i += 1;
    }
    e
}

/// Singular vector at weight `p/2` of `V[p, r]` for odd `p > 0`:
/// `Σ_{i=0}^{(p-1)/2} Ψ(-i-1/2) S_{(p-1)/2-i}(-α/(2c_{L,α}))`.
pub fn sing_nep<F: Field>(p: i64, cla: &F) -> Result<Element<F>, FormulaError> {
    if p <= 0 || p % 2 == 0 {
        return Err(FormulaError::WrongP { expected: "odd p > 0", p });
    }
    let scale = inv(cla)?.scale(&Rational::frac(-1, 2));
    let top = (p - 1) / 2;
    let mut e = Element::zero();
    for i in 0..=top {
        let psi = Element::generator(Gen::p((-2 * i - 1) as i32));
        e = e.add(&psi.mul(&schur_alpha(top - i, &scale)));
    }
    Ok(e)
}

/// Subsingular vector at weight `p` of `V[p, r]` for odd `p > 0`:
/// `S_p(-α/c_{L,α}) + (1/(2c_{L,α}²)) Σ_{k=1}^{(p-1)/2} (1/k) A_k B_k` with
/// `A_k = Σ_i Ψ(i+k-p/2) S_i(-α/(2c_{L,α}))`,
/// `B_k = Σ_j Ψ(j-k-p/2) S_j(-α/(2c_{L,α}))`.
///
/// The prefactor `1/(2c_{L,α}²)` converts the fermion bilinear of the free
/// field screening (`Ψ = -√2 c_{L,α} Ψ⁻`) into generators of the algebra;
/// without it the vector is not annihilated by the raising operators.
pub fn subsing<F: Field>(p: i64, cla: &F) -> Result<Element<F>, FormulaError> {
    if p <= 0 || p % 2 == 0 {
        return Err(FormulaError::WrongP { expected: "odd p > 0", p });
    }
    let ic = inv(cla)?;
    let half = ic.scale(&Rational::frac(-1, 2));
    let bilinear = ic.mul(&ic).scale(&Rational::frac(1, 2));
    let mut e = schur_alpha(p, &ic.neg());
    for k in 1..=(p - 1) / 2 {
        let a = psi_schur_sum(|i| 2 * (i + k) - p, &half);
        let b = psi_schur_sum(|j| 2 * (j - k) - p, &half);
        e = e.add(&a.mul(&b).scale(&bilinear.scale(&Rational::frac(1, k))));
    }
    Ok(e)
}

/// Singular vector at weight `p` of `V[p, r]` for even `p > 0`:
/// `S_p(-α/c_{L,α}) + (1/(2c_{L,α}²)) Σ_{k=0}^{p/2-1} (1/(k+1/2)) A_k B_k` with
/// `A_k = Σ_i Ψ(i+k-(p-1)/2) S_i`, `B_k = Σ_j Ψ(j-k-(p+1)/2) S_j`, Schur
/// polynomials in `-α/(2c_{L,α})`. The prefactor is explained at
/// [`subsing`].
pub fn sing_par<F: Field>(p: i64, cla: &F) -> Result<Element<F>, FormulaError> {
    if p <= 0 || p % 2 != 0 {
        return Err(FormulaError::WrongP { expected: "even p > 0", p });
    }
    let ic = inv(cla)?;
    let half = ic.scale(&Rational::frac(-1, 2));
    let bilinear = ic.mul(&ic).scale(&Rational::frac(1, 2));
    let mut e = schur_alpha(p, &ic.neg());
    for k in 0..p / 2 {
        let a = psi_schur_sum(|i| 2 * (i + k) - (p - 1), &half);
        let b = psi_schur_sum(|j| 2 * (j - k) - (p + 1), &half);
        e = e.add(&a.mul(&b).scale(&bilinear.scale(&Rational::frac(2, 2 * k + 1))));
    }
    Ok(e)
}

/// `Φ(p, r)` for negative integer `p`, as printed, with `n = -p`:
///
/// `Σ_{i=1}^{n} (L(-i) + (c_L-27)/(24c_{L,α}) α(-i)) S_{n-i}`
/// `+ S_n (L(0) + (c_L-3)/(24c_{L,α}) α(0))`
/// `+ 1/(2c_{L,α}) Σ_{i,k} Ψ(-i-1/2) G(-k-1/2) S_{n-i-k-1}`
/// `- (c_L-15)/(24c_{L,α}²) Σ_{i,k} i Ψ(-i-1/2) Ψ(-k-1/2) S_{n-i-k-1}`,
///
/// Schur polynomials in `α/c_{L,α}`, products taken in the order written.
/// Its image on the highest-weight vector is not singular; see
/// [`phi_operator`].
pub fn phi_operator_as_printed<F: Field>(p: i64, cl: &F, cla: &F) -> Result<Element<F>, FormulaError> {
    phi_parts(p, cl, cla, false)
}

/// Singular vector of weight `-p` in `V[p, r]` for negative integer `p`.
///
/// Same four parts as [`phi_operator_as_printed`] except the pure-α
/// part: `S_{n-i}` stands to the left of `L(-i)`, and the sum
/// `(c_L-27)/(24c_{L,α}) Σ_i α(-i) S_{n-i}` is replaced by
///
/// `(c_L-3)/24 ((n+2)(n-1) S_n - Σ_i (n-i) y_i S_{n-i})`, `y = α/c_{L,α}`,
///
/// which together with `S_n h_{p,r}`-type terms gives the pure-α part
/// `Σ_i (r - (n-i)(c_L-3)/24) y_i S_{n-i}(y)`.
pub fn phi_operator<F: Field>(p: i64, cl: &F, cla: &F) -> Result<Element<F>, FormulaError> {
    phi_parts(p, cl, cla, true)
}

fn phi_parts<F: Field>(p: i64, cl: &F, cla: &F, corrected: bool) -> Result<Element<F>, FormulaError> {
    if p >= 0 {
        return Err(FormulaError::WrongP { expected: "negative p", p });
    }
    let n = -p;
    let ic = inv(cla)?;
    let s = |k: i64| schur_alpha(k, &ic);
    let g = |x: Gen| Element::<F>::generator(x);
    let k27 = cl.sub(&F::from_int(27)).mul(&ic).scale(&Rational::frac(1, 24));
    let k3 = cl.sub(&F::from_int(3)).mul(&ic).scale(&Rational::frac(1, 24));
    let k15 = cl.sub(&F::from_int(15)).mul(&ic).mul(&ic).scale(&Rational::frac(-1, 24));
    let c3 = cl.sub(&F::from_int(3)).scale(&Rational::frac(1, 24));

    let mut e = Element::zero();
    for i in 1..=n {
        if corrected {
            e = e.add(&s(n - i).mul(&g(Gen::l(-i as i32))));
            let coeff = c3.mul(&ic).scale(&Rational::from(-(n - i)));
            e = e.add(&g(Gen::a(-i as i32)).mul(&s(n - i)).scale(&coeff));
        } else {
            let head = g(Gen::l(-i as i32)).add(&g(Gen::a(-i as i32)).scale(&k27));
            e = e.add(&head.mul(&s(n - i)));
        }
    }
    if corrected {
        e = e.add(&s(n).scale(&c3.scale(&Rational::from((n + 2) * (n - 1)))));
    }
    let zero = g(Gen::l(0)).add(&g(Gen::a(0)).scale(&k3));
    e = e.add(&s(n).mul(&zero));
    let half = ic.scale(&Rational::frac(1, 2));
    for i in 0..n {
        for k in 0..n - i {
            let psi = g(Gen::p((-2 * i - 1) as i32));
            let gg = g(Gen::g((-2 * k - 1) as i32));
            e = e.add(&psi.mul(&gg).mul(&s(n - i - k - 1)).scale(&half));
            if i > 0 {
                let psi2 = g(Gen::p((-2 * k - 1) as i32));
                let term = psi.mul(&psi2).mul(&s(n - i - k - 1));
                e = e.add(&term.scale(&k15.scale(&Rational::from(i))));
            }
        }
    }
    Ok(e)
}
