use super::*;
use crate::algebra::{Element, Gen, Half, StandardBrackets};
use crate::qchar::char_verma;
use crate::scalars::Rational;
use crate::verma::{pr_to_hw, schur_alpha, VermaModule};

fn q(a: i64, b: i64) -> Rational {
    Rational::frac(a, b)
}

fn real() -> Realization {
    Realization::new(q(11, 2), q(2, 3)).unwrap()
}

fn mono(pp: &[i32], pm: &[i32], d: &[i32], c: &[i32]) -> FockMonomial {
    FockMonomial { psi_plus: pp.to_vec(), psi_minus: pm.to_vec(), d_part: d.to_vec(), c_part: c.to_vec() }
}

#[test]
fn free_modes() {
    let re = real();
    let v = re.v_pr(&q(3, 1), &q(1, 3));
    let c0 = free_mode_act(FreeField::C, Half(0), &v).unwrap();
    assert_eq!(c0, v.scale(&q(-4, 1)));
    let f = free_mode_act(FreeField::PsiMinus, Half(-1), &v).unwrap();
    let back = free_mode_act(FreeField::PsiPlus, Half(1), &f).unwrap();
    assert_eq!(back, v.scale(&q(2, 1)));
    let cv = free_mode_act(FreeField::C, Half(-2), &v).unwrap();
    assert_eq!(free_mode_act(FreeField::D, Half(2), &cv).unwrap(), v.scale(&q(2, 1)));
    assert!(free_mode_act(FreeField::C, Half(1), &v).is_err());
    assert!(free_mode_act(FreeField::PsiPlus, Half(2), &v).is_err());
}

#[test]
fn fermion_signs() {
    let s = LatticePoint::new(q(0, 1), q(0, 1));
    let v = FockVector::vacuum(s.clone());
    // φ⁺(-1/2) φ⁻(-3/2) v, then φ⁺(-3/2) in front: passes no φ⁺ of larger mode
    let a = free_mode_act(FreeField::PsiMinus, Half(-3), &v).unwrap();
    let a = free_mode_act(FreeField::PsiPlus, Half(-1), &a).unwrap();
    assert_eq!(a, FockVector::monomial(s.clone(), mono(&[1], &[3], &[], &[])));
    let b = free_mode_act(FreeField::PsiPlus, Half(-3), &a).unwrap();
    assert_eq!(b, FockVector::monomial(s.clone(), mono(&[3, 1], &[3], &[], &[])));
    let b2 = free_mode_act(FreeField::PsiPlus, Half(-1), &free_mode_act(FreeField::PsiPlus, Half(-3), &a).unwrap());
    assert!(b2.unwrap().is_zero());
    // φ⁻(1/2) removes φ⁺(-1/2) after passing φ⁺(-3/2)
    let c = free_mode_act(FreeField::PsiMinus, Half(1), &b).unwrap();
    assert_eq!(c, FockVector::monomial(s, mono(&[3], &[3], &[], &[])).scale(&q(-2, 1)));
}

#[test]
fn fock_dims_match_verma_character() {
    let series = char_verma(Half(10));
    for (d, n) in fock_dims(Half(8)) {
        assert_eq!(series.coefficient(d), (n as i64).into(), "degree {d}");
    }
}

#[test]
fn realized_highest_weight() {
    let re = real();
    for (p, r) in [(q(1, 1), q(1, 3)), (q(-2, 1), q(3, 4)), (q(1, 2), q(1, 3))] {
        let v = re.v_pr(&p, &r);
        let a0 = re.realized_act(RealizedField::Alpha, Half(0), &v).unwrap();
        assert_eq!(a0, v.scale(&(&(&p + &q(1, 1)) * &q(2, 3))));
        // h = (1 - p²)(c_L - 3)/24 - r p with c_L - 3 = 5/2
        let h = &(&(&q(1, 1) - &(&p * &p)) * &q(5, 48)) - &(&r * &p);
        let l0 = re.realized_act(RealizedField::Omega, Half(0), &v).unwrap();
        assert_eq!(l0, v.scale(&h));
        for t in [1, 3] {
            assert!(re.realized_act(RealizedField::Tau, Half(t), &v).unwrap().is_zero());
        }
        assert!(re.realized_act(RealizedField::Omega, Half(1), &v).is_err());
    }
}

#[test]
fn realize_alpha_words() {
    let re = real();
    let (p, r) = (q(1, 2), q(1, 3));
    let x = Element::word(&[Gen::a(-2), Gen::a(-1), Gen::a(-1)], q(1, 1));
    let got = re.realize_element(&x, &p, &r);
    let want = FockVector::monomial(re.sector(&p, &r), mono(&[], &[], &[], &[2, 1, 1])).scale(&q(-8, 27));
    assert_eq!(got, want);
    let psi = re.realize_element(&Element::generator(Gen::p(-1)), &p, &r);
    assert_eq!(psi, FockVector::monomial(re.sector(&p, &r), mono(&[], &[1], &[], &[])).scale(&q(-2, 3)));
}

#[test]
fn l_minus_one_leading_coefficient() {
    // L(-1) v contains -(p+1)/2 · d(-1) v
    let re = real();
    for p in [q(1, 1), q(3, 1), q(1, 2)] {
        let v = re.realize_element(&Element::generator(Gen::l(-1)), &p, &q(1, 3));
        let d = v.coefficient(&mono(&[], &[], &[1], &[]));
        assert_eq!(d, &(&p + &q(1, 1)) * &q(-1, 2));
    }
}

#[test]
fn realization_small() {
    let re = real();
    let sectors: Vec<_> = [(q(-1, 1), q(0, 1)), (q(2, 1), q(1, 2))].iter().map(|(p, r)| re.sector(p, r)).collect();
    let out = check_realization(&re, &StandardBrackets, &sectors, Half(2), 4);
    assert!(out.pass(), "{:?}", out.failures);
    assert!(out.checked > 1000);
}

/// `S_p(c)` from `exp(Σ c(-n) z^n / n)`.
fn schur_c(p: i64, s: &LatticePoint) -> FockVector {
    let v = |c: &[i32]| FockVector::monomial(s.clone(), mono(&[], &[], &[], c));
    match p {
        1 => v(&[1]),
        2 => v(&[1, 1]).add(&v(&[2])).scale(&q(1, 2)),
        3 => v(&[1, 1, 1]).scale(&q(1, 6)).add(&v(&[2, 1]).scale(&q(1, 2))).add(&v(&[3]).scale(&q(1, 3))),
        _ => unreachable!(),
    }
}

#[test]
fn lattice_modes() {
    let re = real();
    let r = q(1, 3);
    for p in 1..=3 {
        let pq = Rational::from(p);
        let got = lattice_exp_act(2, &q(0, 1), &re.v_pr(&pq, &(&r - &q(1, 1)))).unwrap();
        assert_eq!(got, schur_c(p, &re.sector(&pq, &r)));
    }
    // ⟨c, v_{-1,r}⟩ = 0: the Schur index is negative
    let v = re.v_pr(&q(-1, 1), &r);
    assert!(lattice_exp_act(2, &q(0, 1), &v).unwrap().is_zero());
    assert!(lattice_exp_act(1, &q(1, 2), &v).is_err());
    // twisted sector: c/2 modes are half-integers
    let tw = re.v_pr(&q(2, 1), &r);
    assert!(lattice_exp_act(1, &q(0, 1), &tw).is_err());
    assert!(lattice_exp_act(1, &q(1, 2), &tw).is_ok());
}

#[test]
fn a_modes_on_top_vectors() {
    let re = real();
    let r = q(1, 3);
    let got = a_mode(&q(0, 1), &re.v_pr(&q(1, 1), &(&r - &q(1, 2)))).unwrap();
    let s = re.sector(&q(1, 1), &r);
    assert_eq!(got, FockVector::monomial(s, mono(&[], &[1], &[], &[])));
    for p in [1i64, 3, 5] {
        let pq = Rational::from(p);
        let v = re.v_pr(&pq, &(&r - &q(1, 2)));
        let top = (p - 1) / 2;
        for n in -3..=top + 2 {
            let got = a_mode(&Rational::from(n), &v).unwrap();
            // -(1/c_{L,α}) Σ_i Ψ(-i-1/2) S_{(p-1)/2-n-i}(-α/(2c_{L,α})) v_{p,r}
            let mut x = Element::zero();
            for i in 0..=(top - n).max(-1) {
                let psi = Element::generator(Gen::p((-2 * i - 1) as i32));
                x = x.add(&psi.mul(&schur_alpha(top - n - i, &q(-3, 4))));
            }
            let want = re.realize_element(&x, &pq, &r).scale(&q(-3, 2));
            assert_eq!(got, want, "p = {p}, n = {n}");
            if n > top {
                assert!(got.is_zero());
            }
        }
    }
}

#[test]
fn screening_images_match_explicit_formulas() {
    let re = real();
    let r = q(1, 3);
    for p in [1i64, 3] {
        let pq = Rational::from(p);
        let u0 = screening_q(&re.v_pr(&pq, &(&r - &q(1, 2)))).unwrap();
        assert_eq!(u0, re.build_singular_odd(p, &r).unwrap().scale(&q(-3, 2)));
        let w = screening_g(&re.v_pr(&pq, &(&r - &q(1, 1))), false).unwrap();
        assert_eq!(w, re.build_subsingular_odd(p, &r).unwrap());
        assert!(!screening_q(&w).unwrap().is_zero());
        assert_eq!(re.act_gen(Gen::g(p as i32), &w), u0);
    }
    let p2 = re.family_vector(2, &r, 1, FamilyKind::Singular).unwrap();
    assert_eq!(p2, re.build_singular_even(2, &r).unwrap());
    assert!(re.family_vector(2, &r, 1, FamilyKind::Subsingular).is_err());
    assert!(re.family_vector(1, &r, 0, FamilyKind::Subsingular).is_err());
    assert!(re.build_singular_odd(2, &r).is_err());
}

#[test]
fn screening_algebra_small() {
    let re = real();
    let odd = re.sector(&q(1, 1), &q(1, 3));
    let even = re.sector(&q(2, 1), &q(1, 3));
    assert!(check_q_squared(&odd, Half(4)).unwrap().pass());
    assert!(check_a_anticommute(&odd, Half(2), 4).unwrap().pass());
    assert!(check_a_anticommute(&even, Half(2), 4).unwrap().pass());
    assert!(check_q_commutes(&re, &odd, Half(2), 4).unwrap().pass());
    assert!(check_screening_commutes(&re, &odd, Half(2), 4, false).unwrap().pass());
    assert!(check_screening_commutes(&re, &even, Half(2), 4, true).unwrap().pass());
    assert!(check_q_squared(&even, Half(1)).is_err());
}

#[test]
fn screening_kernel_dims() {
    let re = real();
    let s = re.sector(&q(-1, 1), &q(0, 1));
    let dims: Vec<usize> = kernel_q_g_dims(&s, Half(3)).unwrap().into_iter().map(|(_, n)| n).collect();
    assert_eq!(dims, vec![1, 1, 1, 3]);
}

#[test]
fn realized_images_span_or_are_simple() {
    let re = real();
    let r = q(1, 3);
    for p in [q(1, 2), q(1, 1), q(2, 1)] {
        for (d, n) in realized_span_dims(&re, &p, &r, Half(4)) {
            assert_eq!(n, FockMonomial::all_of_degree(d).len(), "p = {p}, {d}");
        }
    }
    for p in [q(-1, 1), q(-2, 1)] {
        let m = VermaModule::new(pr_to_hw(&p, &r, re.cl(), re.cla()));
        for (d, n) in realized_span_dims(&re, &p, &r, Half(4)) {
            assert_eq!(n, m.simple_dim(d), "p = {p}, {d}");
        }
    }
}

#[test]
fn no_singular_vectors_in_lattice_free_part() {
    // C_{p,r}: monomials in Ψ and α only, i.e. no φ⁺ and no d modes
    let re = real();
    for p in [q(-1, 1), q(-2, 1)] {
        let s = re.sector(&p, &q(1, 3));
        for d in Half(4).steps_up_to().skip(1) {
            let raising: Vec<Gen> = crate::algebra::generators_up_to(d.twice())
                .into_iter()
                .filter(|g| g.twice > 0 && !g.kind.is_central())
                .collect();
            let images: Vec<Vec<FockVector>> = FockMonomial::all_of_degree(d)
                .into_iter()
                .filter(|m| m.psi_plus.is_empty() && m.d_part.is_empty())
                .map(|m| {
                    let v = FockVector::monomial(s.clone(), m);
                    raising.iter().map(|&g| re.act_gen(g, &v)).collect()
                })
                .collect();
            assert!(!images.is_empty());
            assert!(checks::kernel_of_images(&images).is_empty(), "p = {p}, {d}");
        }
    }
}
