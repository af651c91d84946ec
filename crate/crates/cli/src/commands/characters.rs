use shv_core::algebra::Half;
use shv_core::qchar::{char_simple, char_verma, compare_dims};
use shv_core::scalars::Rational;

use super::{anchor, halves, simple_dims, verma};
use crate::cache::Cache;
use crate::config::{ConfigError, Mode, RunConfig};
use crate::report::Check;

pub(super) fn run(cfg: &RunConfig, cache: &Cache) -> Result<Vec<Check>, ConfigError> {
    let p = cfg.p_integer()?;
    if p == 0 {
        return Err(ConfigError("char needs a nonzero integer --p".into()));
    }
    Ok(vec![
        verma_check(cfg),
        char_checks(cache, &cfg.cl, &cfg.cla, p, &cfg.r, cfg.max_degree, cfg.mode),
        duality_check(cache, &cfg.cl, &cfg.cla, p, &cfg.r, cfg.max_degree, cfg.mode),
    ])
}

fn verma_check(cfg: &RunConfig) -> Check {
    let m = verma(&cfg.cl, &cfg.cla, &cfg.p, &cfg.r);
    let dims: Vec<(Half, usize)> = cfg.max_degree.steps_up_to().map(|d| (d, m.dim(d))).collect();
    let report = compare_dims(&char_verma(cfg.max_degree), &dims).expect("every degree supplied");
    Check::new("Verma character counts the PBW basis", anchor::CHAR, report.pass(), format!("{report}"))
}

fn r_text(r: &Rational, mode: Mode) -> String {
    match mode {
        Mode::Specialized => format!("r = {r}"),
        Mode::Symbolic => "r symbolic".to_string(),
    }
}

/// The simple character against the Gram ranks of `V[p,r]`.
pub fn char_checks(
    cache: &Cache,
    cl: &Rational,
    cla: &Rational,
    p: i64,
    r: &Rational,
    max_degree: Half,
    mode: Mode,
) -> Check {
    let series = char_simple(p, max_degree).expect("p nonzero").with_offset("h_{p,r}");
    let dims = simple_dims(cache, cl, cla, &Rational::from(p), r, max_degree, mode);
    let graded: Vec<(Half, usize)> = max_degree.steps_up_to().zip(dims.iter().copied()).collect();
    let report = compare_dims(&series, &graded).expect("every degree supplied");
    let mut details = format!("p = {p}, {}: simple dims {}\n{series}\n{report}", r_text(r, mode), halves(&dims));
    if !report.pass() {
        details.push_str(&format!("\nmismatch at degrees {}", super::list(&report.failing_degrees())));
    }
    Check::new(format!("character of L[{p},r] equals the Gram ranks"), anchor::CHAR, report.pass(), details)
}

/// Simple graded dimensions of `(p, r)` and `(-p, -r)` agree.
pub fn duality_check(
    cache: &Cache,
    cl: &Rational,
    cla: &Rational,
    p: i64,
    r: &Rational,
    max_degree: Half,
    mode: Mode,
) -> Check {
    let a = simple_dims(cache, cl, cla, &Rational::from(p), r, max_degree, mode);
    let b = simple_dims(cache, cl, cla, &Rational::from(-p), &-r, max_degree, mode);
    Check::new(
        format!("L[{p},r] and L[{},-r] have equal graded dimensions", -p),
        anchor::DUALITY,
        a == b,
        format!("{}, degree <= {max_degree}: {} vs {}", r_text(r, mode), halves(&a), halves(&b)),
    )
}
