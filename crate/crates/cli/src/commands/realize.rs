use shv_core::algebra::{Brackets, Half, StandardBrackets};
use shv_core::freefield::{check_realization, fock_dims, realized_span_dims, LatticePoint, Realization};
use shv_core::scalars::Rational;

use super::{anchor, list, realization, simple_dims};
use crate::cache::Cache;
use crate::config::{ConfigError, Mode, RunConfig};
use crate::fault::CorruptedBrackets;
use crate::report::Check;

/// Mode bound for the realized commutators.
pub const REALIZE_BOUND_TWICE: i32 = 6;

pub(super) fn run(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let real = realization(cfg);
    let mut checks = vec![if cfg.inject_fault {
        realization_check(&real, &CorruptedBrackets, &[(cfg.p.clone(), cfg.r.clone())], cfg.max_degree)
    } else {
        realization_check(&real, &StandardBrackets, &[(cfg.p.clone(), cfg.r.clone())], cfg.max_degree)
    }];
    checks.push(span_check(&real, &Cache::disabled(), &cfg.p, &cfg.r, cfg.max_degree));
    Ok(checks)
}

/// Commutators of realized modes with `|2·mode| ≤ 6` against the bracket
/// table, on every Fock monomial of degree `≤ max_degree` in each sector.
pub fn realization_check<B: Brackets>(
    real: &Realization,
    brackets: &B,
    sectors: &[(Rational, Rational)],
    max_degree: Half,
) -> Check {
    let points: Vec<LatticePoint> = sectors.iter().map(|(p, r)| real.sector(p, r)).collect();
    let out = check_realization(real, brackets, &points, max_degree, REALIZE_BOUND_TWICE);
    let labels: Vec<String> = sectors.iter().map(|(p, r)| format!("({p}, {r})")).collect();
    let mut details = format!(
        "sectors (p, r) = {}; cL = {}, cLa = {}; degree <= {max_degree}; {} operator identities checked, {} failing",
        labels.join(", "),
        real.cl(),
        real.cla(),
        out.checked,
        out.failures.len()
    );
    for f in out.failures.iter().take(3) {
        details.push('\n');
        details.push_str(f);
    }
    Check::new("realized commutators", anchor::REALIZATION, out.pass(), details)
}

/// For `p ∉ ℤ_{<0}` the realized images of `v_{p,r}` fill every Fock
/// component; for negative integer `p` they have the simple dimensions.
pub fn span_check(real: &Realization, cache: &Cache, p: &Rational, r: &Rational, max_degree: Half) -> Check {
    let spans: Vec<usize> = realized_span_dims(real, p, r, max_degree).into_iter().map(|(_, n)| n).collect();
    let negative_integer = p.is_integer() && *p < Rational::zero();
    let (name, anchor, expected) = if negative_integer {
        let dims = simple_dims(cache, real.cl(), real.cla(), p, r, max_degree, Mode::Specialized);
        ("realized submodule has simple dimensions", anchor::SPAN_NEGATIVE, dims)
    } else {
        let dims = fock_dims(max_degree).into_iter().map(|(_, n)| n).collect();
        ("v_{p,r} generates F_{p,r}", anchor::SPAN, dims)
    };
    let details = format!(
        "degrees 0..{max_degree} in steps of 1/2: realized ranks ({}), expected ({})",
        list(&spans),
        list(&expected)
    );
    Check::new(name, anchor, spans == expected, details)
}
