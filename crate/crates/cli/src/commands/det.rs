use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::json;
use shv_core::algebra::Half;
use shv_core::scalars::Rational;
use shv_core::verma::{det_vanishing_check, predicted_roots, singular_vectors, DetReport};

use super::{anchor, verma};
use crate::cache::Cache;
use crate::config::{ConfigError, RunConfig};
use crate::report::Check;

pub(super) fn run(cfg: &RunConfig, cache: &Cache) -> Result<Vec<Check>, ConfigError> {
    Ok(det_checks(cache, &cfg.cl, &cfg.cla, &cfg.r, cfg.max_degree))
}

#[derive(Serialize, Deserialize)]
struct Cached {
    degree_in_p: u32,
    roots: Vec<String>,
}

fn vanishing(cache: &Cache, level: Half, cl: &Rational, cla: &Rational, r: &Rational) -> DetReport {
    let inputs = json!({"level": level.to_string(), "cL": cl.to_string(), "cLa": cla.to_string(), "r": r.to_string()});
    let c: Cached = cache.get_or_compute("det_roots", inputs, || {
        let rep = det_vanishing_check(level, cl, cla, r);
        Cached { degree_in_p: rep.degree_in_p, roots: rep.computed.iter().map(|q| q.to_string()).collect() }
    });
    DetReport {
        level,
        degree_in_p: c.degree_in_p,
        computed: c.roots.iter().map(|s| s.parse().expect("cached rational")).collect(),
        predicted: predicted_roots(level),
    }
}

/// Degree of the first singular vector of `V[p,r]` for nonzero integer `p`.
fn first_singular_degree(p: &Rational) -> Half {
    let n = p.to_i64().expect("integer root").unsigned_abs() as i32;
    if n % 2 == 1 {
        Half(n)
    } else {
        Half(2 * n)
    }
}

/// At each level `1/2, 1, …, max_degree`, the rational roots in `p` of the
/// Gram determinant against the product formula, and for each root a
/// singular vector found at the degree where the root first appears.
pub fn det_checks(cache: &Cache, cl: &Rational, cla: &Rational, r: &Rational, max_degree: Half) -> Vec<Check> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<Rational> = BTreeSet::new();
    for level in max_degree.steps_up_to().skip(1) {
        let rep = vanishing(cache, level, cl, cla, r);
        let mut details = format!("cL = {cl}, cLa = {cla}, r = {r}, p symbolic\n{rep}");
        let mut ok = rep.pass();
        let new: Vec<Rational> = rep.computed.difference(&seen).cloned().collect();
        for p in &new {
            if !p.is_integer() {
                ok = false;
                details.push_str(&format!("\nroot p = {p} is not an integer"));
                continue;
            }
            let d = first_singular_degree(p);
            let found = d <= level && !singular_vectors(&verma(cl, cla, p, r), d).is_empty();
            ok &= found;
            details.push_str(&format!(
                "\np = {p}: {} singular vector at degree {d}",
                if found { "found a" } else { "no" }
            ));
        }
        if new.is_empty() {
            details.push_str("\nno new roots at this level");
        }
        seen.extend(rep.computed.iter().cloned());
        out.push(Check::new(format!("determinant vanishing locus at level {level}"), anchor::DET, ok, details));
    }
    if out.is_empty() {
        out.push(Check::skip("determinant vanishing locus", anchor::DET, "no level in 1/2..--max-degree"));
    }
    out
}
