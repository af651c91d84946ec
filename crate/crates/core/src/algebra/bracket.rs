use super::{koszul, Gen, Kind};
use crate::scalars::Rational;

/// A linear combination of generators, the value of a super-bracket.
pub type Bracket = Vec<(Gen, Rational)>;

/// Source of structure constants. The module machinery is generic over it so
/// a deliberately corrupted table can be fed through the same checks.
pub trait Brackets: Sync {
    fn bracket(&self, x: Gen, y: Gen) -> Bracket;
}

/// The defining relations of SH.
#[derive(Clone, Copy, Debug, Default)]
pub struct StandardBrackets;

impl Brackets for StandardBrackets {
    fn bracket(&self, x: Gen, y: Gen) -> Bracket {
        super_bracket(x, y)
    }
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn push(out: &mut Bracket, g: Gen, c: Rational) {
    if !c.is_zero() {
        out.push((g, c));
    }
}

/// `[x, y]`, the anticommutator when both are odd.
pub fn super_bracket(x: Gen, y: Gen) -> Bracket {
    if x.kind.is_central() || y.kind.is_central() {
        return Vec::new();
    }
    if let Some(b) = ordered_bracket(x, y) {
        return b;
    }
    let b = ordered_bracket(y, x).expect("every pair is covered in one order");
    // [x, y] = -(-1)^{|x||y|} [y, x]
    let s = Rational::from(-koszul(x, y));
    b.into_iter().map(|(g, c)| (g, c * &s)).collect()
}

/// The relations exactly as listed, for the kind orders in which they are
/// stated; `None` for the reversed orders.
fn ordered_bracket(x: Gen, y: Gen) -> Option<Bracket> {
    use Kind::*;
    let mut out = Vec::new();
    match (x.kind, y.kind) {
        (A, A) => {
            let (m, n) = (x.twice / 2, y.twice / 2);
            if m + n == 0 {
                push(&mut out, Gen::central(CA), q(m as i64));
            }
        }
        (L, A) => {
            let (m, n) = (x.twice as i64 / 2, y.twice as i64 / 2);
            push(&mut out, Gen::a((m + n) as i32), q(-n));
            if m + n == 0 {
                push(&mut out, Gen::central(CLA), q(-(m * m + m)));
            }
        }
        (L, L) => {
            let (m, n) = (x.twice as i64 / 2, y.twice as i64 / 2);
            push(&mut out, Gen::l((m + n) as i32), q(m - n));
            if m + n == 0 {
                push(&mut out, Gen::central(CL), Rational::frac(m * m * m - m, 12));
            }
        }
        (P, P) => {
            let (m, n) = ((x.twice - 1) / 2, (y.twice - 1) / 2);
            if m + n + 1 == 0 {
                push(&mut out, Gen::central(CA), q(1));
            }
        }
        (A, P) => {}
        (G, G) => {
            let (m, n) = ((x.twice as i64 - 1) / 2, (y.twice as i64 - 1) / 2);
            push(&mut out, Gen::l((m + n + 1) as i32), q(2));
            if m + n + 1 == 0 {
                push(&mut out, Gen::central(CL), Rational::frac(m * m + m, 3));
            }
        }
        (L, G) => {
            let m = x.twice as i64 / 2;
            let n = (y.twice as i64 - 1) / 2;
            // (m/2 - n - 1/2) G(m + n + 1/2)
            push(&mut out, Gen::g(x.twice + y.twice), Rational::frac(m - 2 * n - 1, 2));
        }
        (A, G) => {
            let m = x.twice / 2;
            push(&mut out, Gen::p(x.twice + y.twice), q(m as i64));
        }
        (P, L) => {
            let m = (x.twice as i64 - 1) / 2;
            let n = y.twice as i64 / 2;
            push(&mut out, Gen::p(x.twice + y.twice), Rational::frac(2 * m + n + 1, 2));
        }
        (P, G) => {
            let m = (x.twice as i64 - 1) / 2;
            let n = (y.twice as i64 - 1) / 2;
            push(&mut out, Gen::a((m + n + 1) as i32), q(1));
            if m + n + 1 == 0 {
                push(&mut out, Gen::central(CLA), q(2 * m));
            }
        }
        _ => return None,
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(b: &Bracket) -> String {
        let parts: Vec<String> = b.iter().map(|(g, c)| format!("{}*{}", c, g)).collect();
        parts.join(" + ")
    }

    #[test]
    fn listed_values() {
        assert_eq!(show(&super_bracket(Gen::l(2), Gen::l(-2))), "4*L(0) + 1/2*CL");
        assert_eq!(show(&super_bracket(Gen::p(3), Gen::g(-3))), "1*A(0) + 2*CLa");
        assert!(super_bracket(Gen::a(5), Gen::p(-1)).is_empty());
        assert_eq!(show(&super_bracket(Gen::g(1), Gen::g(-1))), "2*L(0)");
    }

    #[test]
    fn reversed_order_uses_antisymmetry() {
        // [α(0), L(m)] = -[L(m), α(0)] = 0 and [G, Ψ] = [Ψ, G] for odd pairs
        assert!(super_bracket(Gen::a(0), Gen::l(3)).is_empty());
        assert_eq!(super_bracket(Gen::g(-3), Gen::p(3)), super_bracket(Gen::p(3), Gen::g(-3)));
        assert_eq!(show(&super_bracket(Gen::a(-1), Gen::l(1))), "-1*A(0) + 2*CLa");
    }
}
