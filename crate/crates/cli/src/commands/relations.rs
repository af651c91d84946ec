use std::collections::{BTreeMap, BTreeSet};

use shv_core::algebra::{check_antisymmetry, check_jacobi, Brackets, Gen, IdentityFailure};

use super::anchor;
use crate::report::Check;

/// The generator pair occurring in the most failures (higher mode first),
/// with its count.
fn likeliest_pair(failures: &[IdentityFailure]) -> Option<((Gen, Gen), usize)> {
    let mut counts: BTreeMap<(Gen, Gen), usize> = BTreeMap::new();
    for f in failures {
        let g = &f.generators;
        let mut seen = BTreeSet::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let pair = if g[i].mode() >= g[j].mode() { (g[i], g[j]) } else { (g[j], g[i]) };
                if seen.insert(pair) {
                    *counts.entry(pair).or_default() += 1;
                }
            }
        }
    }
    // ties resolve to the smallest pair, so the report stays deterministic
    counts.into_iter().fold(None, |best, (pair, n)| match best {
        Some((_, m)) if m >= n => best,
        _ => Some((pair, n)),
    })
}

fn summary(count: usize, failures: &[IdentityFailure], what: &str, bound: i32) -> String {
    let mut s = format!("{count} {what} with |2*mode| <= {bound}, {} failing", failures.len());
    if let Some(((a, b), n)) = likeliest_pair(failures) {
        s.push_str(&format!("\nmost implicated bracket: [{a}, {b}], in {n} of {} failures", failures.len()));
    }
    for f in failures.iter().take(5) {
        s.push('\n');
        s.push_str(&f.to_string());
    }
    s
}

/// Super-antisymmetry over ordered pairs and super-Jacobi over triples of
/// generators with `|2·mode| ≤ bound_twice`.
pub fn relation_checks<B: Brackets>(bound_twice: i32, brackets: &B) -> Vec<Check> {
    let (n, fa) = check_antisymmetry(bound_twice, brackets);
    let (m, fj) = check_jacobi(bound_twice, brackets);
    vec![
        Check::new("super-antisymmetry", anchor::RELATIONS, fa.is_empty(), summary(n, &fa, "pairs", bound_twice)),
        Check::new("super-Jacobi", anchor::RELATIONS, fj.is_empty(), summary(m, &fj, "triples", bound_twice)),
    ]
}
