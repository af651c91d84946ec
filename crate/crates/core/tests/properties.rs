use std::collections::BTreeMap;

use proptest::prelude::*;
use shv_core::algebra::{koszul, normal_order, super_bracket, Element, Gen, Half, Kind};
use shv_core::freefield::{a_mode, screening_q, FockMonomial, FockVector, LatticePoint, Realization};
use shv_core::linalg::{determinant, kernel_basis, rank, rational_determinant, Matrix};
use shv_core::scalars::{ParamPolynomial, Parameter, Rational, Ring};
use shv_core::verma::{pr_to_hw, VermaModule};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(a, b)| Rational::frac(a, b))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn gen() -> impl Strategy<Value = Gen> {
    prop_oneof![
        (-3i32..=3).prop_map(Gen::l),
        (-3i32..=3).prop_map(Gen::a),
        (-3i32..=2).prop_map(|t| Gen::g(2 * t + 1)),
        (-3i32..=2).prop_map(|t| Gen::p(2 * t + 1)),
        Just(Gen::central(Kind::CL)),
        Just(Gen::central(Kind::CLA)),
    ]
}

fn word(max: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(gen(), 0..=max)
}

fn element() -> impl Strategy<Value = Element<Rational>> {
    prop::collection::vec((word(3), rational()), 1..=2)
        .prop_map(|ts| ts.into_iter().fold(Element::zero(), |acc, (w, c)| acc.add(&normal_order(&w, c))))
}

fn poly() -> impl Strategy<Value = ParamPolynomial> {
    prop::collection::vec((rational(), 0u32..=2, 0u32..=2), 1..=3).prop_map(|ts| {
        ts.into_iter().fold(ParamPolynomial::zero(), |acc, (c, i, j)| {
            let m = ParamPolynomial::var(Parameter::P).pow(i).mul(&ParamPolynomial::var(Parameter::R).pow(j)).scale(&c);
            acc.add(&m)
        })
    })
}

fn matrix(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(Rational::from).collect()).unwrap())
    })
}

fn square(max_dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(-4i64..=4, n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(Rational::from).collect()).unwrap())
    })
}

/// A random vector of one homogeneous degree `≤ 3/2` in an untwisted sector.
fn untwisted_vector() -> impl Strategy<Value = FockVector> {
    (prop::sample::select(vec![-3i64, -1, 1, 3]), rational(), 0i32..=3).prop_flat_map(|(p, r, d)| {
        let basis = FockMonomial::all_of_degree(Half(d));
        let n = basis.len();
        prop::collection::vec(-3i64..=3, n).prop_map(move |cs| {
            let sector = LatticePoint::v_pr(&Rational::from(p), &r, &Rational::frac(11, 2));
            let mut v = FockVector::zero(sector.clone());
            for (m, c) in basis.iter().zip(cs) {
                v = v.add(&FockVector::monomial(sector.clone(), m.clone()).scale(&Rational::from(c)));
            }
            v
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a / &a, Rational::one());
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in poly(), g in poly(), p in rational(), r in rational()) {
        let at = BTreeMap::from([(Parameter::P, p), (Parameter::R, r)]);
        let ev = |x: &ParamPolynomial| x.evaluate(&at).unwrap();
        prop_assert_eq!(ev(&f.add(&g)), &ev(&f) + &ev(&g));
        prop_assert_eq!(ev(&f.mul(&g)), &ev(&f) * &ev(&g));
    }

    #[test]
    fn rank_nullity(m in matrix(6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn determinant_is_multiplicative_and_alternating(a in square(4), seed in any::<u64>()) {
        let n = a.rows();
        let b = Matrix::new(n, n, (0..n * n).map(|i| Rational::from(((seed >> (i % 60)) % 5) as i64 - 2)).collect()).unwrap();
        let da = determinant(&a).unwrap();
        prop_assert_eq!(determinant(&a.mul(&b).unwrap()).unwrap(), &da * &determinant(&b).unwrap());
        if n >= 2 {
            let mut rows: Vec<Vec<Rational>> = (0..n).map(|i| a.row(i).to_vec()).collect();
            rows.swap(0, n - 1);
            prop_assert_eq!(determinant(&Matrix::from_rows(n, rows).unwrap()).unwrap(), -da);
        }
    }

    #[test]
    fn scaled_integer_determinant_agrees(n in 1usize..=5, entries in prop::collection::vec(rational(), 25)) {
        let m = Matrix::new(n, n, entries[..n * n].to_vec()).unwrap();
        prop_assert_eq!(rational_determinant(&m).unwrap(), determinant(&m).unwrap());
    }

    #[test]
    fn normal_order_is_idempotent(w in word(4), c in nonzero_rational()) {
        let once = normal_order(&w, c);
        let mut again = Element::zero();
        for (w2, c2) in once.terms() {
            again = again.add(&normal_order(w2, c2.clone()));
        }
        prop_assert_eq!(&again, &once);
        prop_assert!(once.is_zero() || once.weight().is_some());
    }

    #[test]
    fn product_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn commutator_of_words_is_the_bracket(x in gen(), y in gen()) {
        let xy = normal_order(&[x, y], Rational::one());
        let yx = normal_order(&[y, x], Rational::from(koszul(x, y)));
        let mut br = Element::zero();
        for (g, c) in super_bracket(x, y) {
            br = br.add(&Element::word(&[g], c));
        }
        prop_assert_eq!(xy.sub(&yx), br);
    }

    #[test]
    fn verma_action_is_a_module_action(x in word(3), y in word(3), r in rational()) {
        let (x, y) = (normal_order(&x, Rational::one()), normal_order(&y, Rational::one()));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let m = VermaModule::new(pr_to_hw(&Rational::frac(1, 2), &r, &Rational::frac(11, 2), &Rational::frac(2, 3)));
        let v = m.highest_weight_vector();
        let lhs = m.act(&x.mul(&y), &v).unwrap();
        let rhs = m.act(&x, &m.act(&y, &v).unwrap()).unwrap();
        // the zero element carries no weight, so only compare degrees of nonzero results
        prop_assert!((lhs.is_zero() && rhs.is_zero()) || lhs == rhs, "{:?} vs {:?}", lhs, rhs);
    }

    #[test]
    fn screening_charge_squares_to_zero(v in untwisted_vector()) {
        prop_assert!(screening_q(&screening_q(&v).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn screening_modes_anticommute(v in untwisted_vector(), m in -3i64..=3, n in -3i64..=3) {
        // untwisted sectors have integer x_d, so the a-modes are integral
        let (m, n) = (Rational::from(m), Rational::from(n));
        let mn = a_mode(&m, &a_mode(&n, &v).unwrap()).unwrap();
        let nm = a_mode(&n, &a_mode(&m, &v).unwrap()).unwrap();
        prop_assert!(mn.add(&nm).is_zero());
    }

    #[test]
    fn realized_commutators(x in gen(), y in gen(), p in rational(), r in rational(), d in 0i32..=2) {
        let real = Realization::new(Rational::frac(11, 2), Rational::frac(2, 3)).unwrap();
        let sector = real.sector(&p, &r);
        for m in FockMonomial::all_of_degree(Half(d)) {
            let w = FockVector::monomial(sector.clone(), m);
            let lhs = real.act_gen(x, &real.act_gen(y, &w)).sub(&real.act_gen(y, &real.act_gen(x, &w)).scale(&Rational::from(koszul(x, y))));
            let mut rhs = FockVector::zero(sector.clone());
            for (g, c) in super_bracket(x, y) {
                rhs = rhs.add(&real.act_gen(g, &w).scale(&c));
            }
            prop_assert_eq!(lhs, rhs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn simple_dims_are_invariant_under_negation(p in prop::sample::select(vec![1i64, 2, 3]), r in rational()) {
        let (cl, cla) = (Rational::frac(11, 2), Rational::frac(2, 3));
        let p = Rational::from(p);
        let m = VermaModule::new(pr_to_hw(&p, &r, &cl, &cla));
        let dual = VermaModule::new(pr_to_hw(&-&p, &-&r, &cl, &cla));
        for d in Half(4).steps_up_to() {
            prop_assert_eq!(m.simple_dim(d), dual.simple_dim(d));
        }
    }
}
