use shv_core::algebra::{Element, Gen, Half};
use shv_core::freefield::{screening_q, FamilyKind, Realization};
use shv_core::linalg::{rank, Matrix, Subspace};
use shv_core::scalars::{Field, RatFunc, Rational};
use shv_core::verma::{
    normalize_leading, phi_operator, sing_nep, sing_par, singular_vectors, subsing, Submodule, VermaModule,
};

use super::{anchor, fock_obstructions, list, realization, verma, verma_obstructions, verma_symbolic};
use crate::config::{ConfigError, Mode, RunConfig};
use crate::report::Check;

pub(super) fn run(cfg: &RunConfig, subsingular: bool) -> Result<Vec<Check>, ConfigError> {
    let p = cfg.p_integer()?;
    if subsingular {
        if p <= 0 || p % 2 == 0 {
            return Err(ConfigError(format!("subsingular needs odd p > 0, got {p}")));
        }
        return Ok(subsingular_checks(cfg, p));
    }
    if p == 0 {
        return Err(ConfigError("singular needs a nonzero integer --p".into()));
    }
    Ok(singular_checks(cfg, p))
}

fn formula<F: Field>(p: i64, cl: &F, cla: &F) -> (Element<F>, &'static str, &'static str) {
    if p < 0 {
        (phi_operator(p, cl, cla).expect("p < 0"), "Phi(p,r) v_{p,r} is singular", anchor::PHI)
    } else if p % 2 == 1 {
        (sing_nep(p, cla).expect("odd p > 0"), "odd-p formula is singular", anchor::SING_ODD)
    } else {
        (sing_par(p, cla).expect("even p > 0"), "even-p formula is singular", anchor::SING_EVEN)
    }
}

fn r_label(cfg: &RunConfig) -> String {
    match cfg.mode {
        Mode::Specialized => format!("r = {}", cfg.r),
        Mode::Symbolic => "r symbolic".to_string(),
    }
}

fn verma_formula_check<F: Field>(m: &VermaModule<F>, p: i64, cfg: &RunConfig) -> Check {
    let lift = |q: &Rational| F::from_rational(q);
    let (x, name, anchor) = formula(p, &lift(&cfg.cl), &lift(&cfg.cla));
    let d = x.weight().expect("homogeneous formula");
    if d > cfg.max_degree {
        return Check::skip(name, anchor, format!("degree {d} is above --max-degree {}", cfg.max_degree));
    }
    let v = m.act_on_hw(&x).expect("homogeneous");
    let obstructions = verma_obstructions(m, &v);
    let kernel = singular_vectors(m, d);
    let mut span = Subspace::new(m.dim(d));
    for k in &kernel {
        span.insert(&k.coords);
    }
    let in_kernel = span.contains(&v.coords);
    let ok = !v.is_zero() && obstructions.is_empty() && in_kernel;
    let mut details = format!("p = {p}, {}, degree {d} (weight h_{{p,r}} + {d})", r_label(cfg));
    if v.is_zero() {
        details.push_str("\nthe vector is zero");
    }
    if obstructions.is_empty() {
        details.push_str(&format!("\nannihilated by every raising generator of mode <= {d}"));
    } else {
        details.push_str(&format!("\nnot annihilated by {}", list(&obstructions)));
    }
    details.push_str(&format!(
        "\nsingular space at degree {d} has dimension {} and {} the vector",
        kernel.len(),
        if in_kernel { "contains" } else { "does not contain" }
    ));
    details.push_str(&format!("\nnormalized: {}", m.vector_to_string(&normalize_leading(m, &v))));
    Check::new(name, anchor, ok, details)
}

fn family_label(p: i64, n: u32, kind: FamilyKind) -> String {
    let power = |op: &str| match n {
        0 => String::new(),
        1 => format!("{op} "),
        _ => format!("{op}^{n} "),
    };
    let shift = |half: bool| match (n, half) {
        (0, true) => "r-1/2".to_string(),
        (_, true) => format!("r-{n}-1/2"),
        (_, false) => format!("r-{n}"),
    };
    match (kind, p % 2 == 0) {
        (FamilyKind::Singular, false) => format!("u^({n}) = {}Q v_{{p,{}}}", power("G"), shift(true)),
        (FamilyKind::Singular, true) => format!("u^({n}) = {}v_{{p,{}}}", power("(G^tw)"), shift(false)),
        (FamilyKind::Subsingular, _) => format!("w^({n}) = {}v_{{p,{}}}", power("G"), shift(false)),
    }
}

fn family_degree(p: i64, n: u32, kind: FamilyKind) -> Half {
    match kind {
        FamilyKind::Singular if p % 2 == 1 => Half((2 * n as i32 + 1) * p as i32),
        _ => Half(2 * n as i32 * p as i32),
    }
}

/// Screening images in `F_{p,r}`: nonzero, of the expected degree, and
/// killed (or for `w`, not killed) by every raising generator of mode up
/// to the degree.
fn family_checks(real: &Realization, p: i64, r: &Rational, kind: FamilyKind, max_degree: Half) -> Vec<Check> {
    let first = if kind == FamilyKind::Singular && p % 2 == 1 { 0 } else { 1 };
    let mut out = Vec::new();
    for n in first.. {
        let d = family_degree(p, n, kind);
        if d > max_degree {
            break;
        }
        let v = real.family_vector(p, r, n, kind).expect("parity checked");
        let obstructions = fock_obstructions(real, &v);
        let degree_ok = v.degree() == Some(d) && v.sector == real.sector(&Rational::from(p), r);
        let (ok, verdict) = match kind {
            FamilyKind::Singular => (
                obstructions.is_empty(),
                if obstructions.is_empty() {
                    "annihilated by every realized raising generator".to_string()
                } else {
                    format!("not annihilated by {}", list(&obstructions))
                },
            ),
            FamilyKind::Subsingular => {
                (!obstructions.is_empty(), format!("not singular: moved by {}", list(&obstructions)))
            }
        };
        let details = format!("p = {p}, r = {r}: {} terms in F_{{p,r}} at degree {d}; {verdict}", v.terms.len());
        out.push(Check::new(family_label(p, n, kind), anchor::FAMILIES, ok && degree_ok && !v.is_zero(), details));
    }
    out
}

/// `x·v_{p,r-1} ↦ x·u` is injective on each degree `≤ max_degree - p`,
/// `u` the even-p singular vector in `V[p,r]`.
pub fn even_injectivity(cl: &Rational, cla: &Rational, r: &Rational, p: i64, max_degree: Half) -> Check {
    let m = verma(cl, cla, &Rational::from(p), r);
    let u = m.act_on_hw(&sing_par(p, cla).expect("even p > 0")).expect("homogeneous");
    let top = max_degree - Half(2 * p as i32);
    let mut rows = Vec::new();
    let mut ok = true;
    for d in top.steps_up_to() {
        let cols: Vec<Vec<Rational>> = m
            .basis(d)
            .words()
            .iter()
            .map(|w| m.act(&Element::word(w, Rational::one()), &u).expect("homogeneous").coords)
            .collect();
        let k = rank(&Matrix::from_columns(m.dim(d + u.degree), &cols).expect("equal lengths"));
        ok &= k == cols.len();
        rows.push(format!("{d}: rank {k} of {}", cols.len()));
    }
    Check::new(
        "x v_{p,r-1} -> x u_{p,r} is injective",
        anchor::EMBEDDING,
        ok,
        format!("p = {p}, r = {r}; {}", rows.join(", ")),
    )
}

pub fn singular_checks(cfg: &RunConfig, p: i64) -> Vec<Check> {
    let pq = Rational::from(p);
    let mut checks = vec![match cfg.mode {
        Mode::Specialized => verma_formula_check(&verma(&cfg.cl, &cfg.cla, &pq, &cfg.r), p, cfg),
        Mode::Symbolic => verma_formula_check::<RatFunc>(&verma_symbolic(&cfg.cl, &cfg.cla, &pq), p, cfg),
    }];
    let real = realization(cfg);
    if p < 0 {
        let d = Half(-2 * p as i32);
        if d <= cfg.max_degree {
            let x = phi_operator(p, &cfg.cl, &cfg.cla).expect("p < 0");
            let image = real.realize_element(&x, &pq, &cfg.r);
            checks.push(Check::new(
                "Phi(p,r) v_{p,r} vanishes in F_{p,r}",
                anchor::SPAN_NEGATIVE,
                image.is_zero(),
                format!(
                    "p = {p}, r = {}: the realized module is simple, so the singular vector maps to {}",
                    cfg.r, image
                ),
            ));
        }
        return checks;
    }
    let d = family_degree(p, if p % 2 == 1 { 0 } else { 1 }, FamilyKind::Singular);
    if d <= cfg.max_degree {
        let (explicit, screened) = if p % 2 == 1 {
            let e = real.build_singular_odd(p, &cfg.r).expect("odd p > 0");
            (e, real.family_vector(p, &cfg.r, 0, FamilyKind::Singular).expect("odd p > 0"))
        } else {
            let e = real.build_singular_even(p, &cfg.r).expect("even p > 0");
            (e, real.family_vector(p, &cfg.r, 1, FamilyKind::Singular).expect("even p > 0"))
        };
        let ratio = explicit.ratio_to(&screened);
        let ok = !explicit.is_zero() && ratio.as_ref().is_some_and(|q| !q.is_zero());
        let details = match (&ratio, p % 2) {
            (Some(q), 1) => format!("Q v_{{p,r-1/2}} = ({q}) * realized formula"),
            (Some(q), _) => format!("G^tw v_{{p,r-1}} = ({q}) * realized formula"),
            (None, _) => "screening image is not proportional to the realized formula".to_string(),
        };
        checks.push(Check::new("realized formula equals the screening image", anchor::FAMILIES, ok, details));
    }
    checks.extend(family_checks(&real, p, &cfg.r, FamilyKind::Singular, cfg.max_degree));
    if p % 2 == 0 && Half(2 * p as i32) <= cfg.max_degree {
        checks.push(even_injectivity(&cfg.cl, &cfg.cla, &cfg.r, p, cfg.max_degree));
    }
    checks
}

fn verma_subsingular_checks<F: Field>(m: &VermaModule<F>, p: i64, cfg: &RunConfig) -> Vec<Check> {
    let cla = F::from_rational(&cfg.cla);
    let w = m.act_on_hw(&subsing(p, &cla).expect("odd p > 0")).expect("homogeneous");
    let u0 = m.act_on_hw(&sing_nep(p, &cla).expect("odd p > 0")).expect("homogeneous");
    let sub = Submodule::generated(m, vec![u0], w.degree).expect("u0 below w");
    let obstructions = verma_obstructions(m, &w);
    let outside = VermaModule::<F>::raising_generators(w.degree)
        .into_iter()
        .filter(|g| g.mode() <= w.degree && !sub.contains(&m.apply(*g, &w)))
        .collect::<Vec<Gen>>();
    let head = format!("p = {p}, {}, degree {}", r_label(cfg), w.degree);
    vec![
        Check::new(
            "w_{p,r} is not singular",
            anchor::SUBSING,
            !obstructions.is_empty(),
            format!("{head}: moved by {}", list(&obstructions)),
        ),
        Check::new(
            "w_{p,r} lies outside <u^(0)>",
            anchor::SUBSING,
            !sub.contains(&w),
            format!("{head}: dim <u^(0)> at degree {} is {} of {}", w.degree, sub.dim(w.degree), m.dim(w.degree)),
        ),
        Check::new(
            "raising images of w_{p,r} lie in <u^(0)>",
            anchor::SUBSING,
            outside.is_empty(),
            if outside.is_empty() {
                format!("{head}: every raising generator of mode <= {} maps w into <u^(0)>", w.degree)
            } else {
                format!("{head}: images outside <u^(0)> for {}", list(&outside))
            },
        ),
    ]
}

pub fn subsingular_checks(cfg: &RunConfig, p: i64) -> Vec<Check> {
    let pq = Rational::from(p);
    if Half(2 * p as i32) > cfg.max_degree {
        return vec![Check::skip(
            "subsingular vector",
            anchor::SUBSING,
            format!("degree {p} is above --max-degree {}", cfg.max_degree),
        )];
    }
    let mut checks = match cfg.mode {
        Mode::Specialized => verma_subsingular_checks(&verma(&cfg.cl, &cfg.cla, &pq, &cfg.r), p, cfg),
        Mode::Symbolic => verma_subsingular_checks::<RatFunc>(&verma_symbolic(&cfg.cl, &cfg.cla, &pq), p, cfg),
    };
    let real = realization(cfg);
    let r = &cfg.r;
    let w = real.build_subsingular_odd(p, r).expect("odd p > 0");
    let qw = screening_q(&w).expect("untwisted sector for odd p");
    checks.push(Check::new(
        "Q w_{p,r} is nonzero",
        anchor::SUBSING,
        !qw.is_zero(),
        format!("p = {p}, r = {r}: Q w has {} terms", qw.terms.len()),
    ));
    let w1 = real.family_vector(p, r, 1, FamilyKind::Subsingular).expect("odd p > 0");
    checks.push(Check::new(
        "w_{p,r} = G v_{p,r-1}",
        anchor::FAMILIES,
        w1 == w,
        format!("p = {p}, r = {r}: {} terms on each side", w.terms.len()),
    ));
    let u0 = real.family_vector(p, r, 0, FamilyKind::Singular).expect("odd p > 0");
    let gw = real.act_gen(Gen::g(p as i32), &w1);
    checks.push(Check::new(
        "G(p/2) w^(1) = u^(0)",
        anchor::GEN,
        gw == u0 && !u0.is_zero(),
        format!("p = {p}, r = {r}: exact equality in F_{{p,r}} ({} terms)", u0.terms.len()),
    ));
    checks.extend(family_checks(&real, p, r, FamilyKind::Subsingular, cfg.max_degree));
    checks
}
