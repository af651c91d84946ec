use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::{koszul, Bracket, Brackets, Gen, Kind};
use crate::scalars::Rational;

/// All generators with `|2·mode| <= bound_twice`, centrals included.
pub fn generators_up_to(bound_twice: i32) -> Vec<Gen> {
    let mut out = Vec::new();
    for t in -bound_twice..=bound_twice {
        for kind in [Kind::P, Kind::A, Kind::G, Kind::L] {
            if let Some(g) = Gen::new(kind, t) {
                out.push(g);
            }
        }
    }
    out.extend([Kind::CL, Kind::CA, Kind::CLA].map(Gen::central));
    out.sort();
    out
}

/// A violated identity: the generators involved and the nonzero residue.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub generators: Vec<Gen>,
    pub residue: Vec<(Gen, Rational)>,
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let res: Vec<String> = self.residue.iter().map(|(g, c)| format!("{}*{}", c, g)).collect();
        write!(f, "{} fails for [{}]: residue {}", self.identity, gens.join(", "), res.join(" + "))
    }
}

fn accumulate(acc: &mut BTreeMap<Gen, Rational>, b: &Bracket, scale: &Rational) {
    for (g, c) in b {
        let e = acc.entry(*g).or_insert_with(Rational::zero);
        *e += &(c * scale);
    }
}

fn residue(acc: BTreeMap<Gen, Rational>) -> Vec<(Gen, Rational)> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `[x, y] + (-1)^{|x||y|} [y, x] = 0` over all ordered pairs.
pub fn check_antisymmetry<B: Brackets>(bound_twice: i32, brackets: &B) -> (usize, Vec<IdentityFailure>) {
    let gens = generators_up_to(bound_twice);
    let mut failures = Vec::new();
    let mut count = 0;
    for &x in &gens {
        for &y in &gens {
            count += 1;
            let mut acc = BTreeMap::new();
            accumulate(&mut acc, &brackets.bracket(x, y), &Rational::one());
            accumulate(&mut acc, &brackets.bracket(y, x), &Rational::from(koszul(x, y)));
            let r = residue(acc);
            if !r.is_empty() {
                failures.push(IdentityFailure { identity: "super-antisymmetry", generators: vec![x, y], residue: r });
            }
        }
    }
    (count, failures)
}

/// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0`
/// over all ordered triples. Inner brackets are linear combinations of
/// generators, so outer brackets extend by linearity.
pub fn check_jacobi<B: Brackets>(bound_twice: i32, brackets: &B) -> (usize, Vec<IdentityFailure>) {
    let gens = generators_up_to(bound_twice);
    let n = gens.len();
    let failures: Vec<IdentityFailure> = gens
        .par_iter()
        .flat_map_iter(|&x| {
            let mut local = Vec::new();
            for &y in &gens {
                for &z in &gens {
                    let mut acc = BTreeMap::new();
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        let sign = Rational::from(koszul(a, c));
                        for (g, k) in brackets.bracket(b, c) {
                            accumulate(&mut acc, &brackets.bracket(a, g), &(&sign * &k));
                        }
                    }
                    let r = residue(acc);
                    if !r.is_empty() {
                        local.push(IdentityFailure { identity: "super-Jacobi", generators: vec![x, y, z], residue: r });
                    }
                }
            }
            local
        })
        .collect();
    (n * n * n, failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StandardBrackets;

    #[test]
    fn small_bound_passes() {
        assert!(check_antisymmetry(4, &StandardBrackets).1.is_empty());
        assert!(check_jacobi(4, &StandardBrackets).1.is_empty());
    }

    struct Corrupted;
    impl Brackets for Corrupted {
        fn bracket(&self, x: Gen, y: Gen) -> Bracket {
            let mut b = crate::algebra::super_bracket(x, y);
            if x == Gen::l(2) && y == Gen::l(-2) {
                b.push((Gen::l(0), Rational::one()));
            }
            b
        }
    }

    #[test]
    fn corruption_is_named() {
        let (_, fails) = check_antisymmetry(4, &Corrupted);
        assert!(fails.iter().any(|f| f.generators == vec![Gen::l(2), Gen::l(-2)]));
        assert!(fails.iter().any(|f| f.to_string().contains("[L(2), L(-2)]")));
    }
}
