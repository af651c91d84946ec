use shv_core::algebra::{super_bracket, Bracket, Brackets, Gen, Kind};
use shv_core::scalars::Rational;

/// The standard bracket table with `[L(2), L(-2)]` off by `L(0)`, and
/// `[L(-2), L(2)]` off by `-L(0)` so the table stays antisymmetric.
#[derive(Clone, Copy, Debug, Default)]
pub struct CorruptedBrackets;

impl Brackets for CorruptedBrackets {
    fn bracket(&self, x: Gen, y: Gen) -> Bracket {
        let mut b = super_bracket(x, y);
        let shift = if (x, y) == (Gen::l(2), Gen::l(-2)) {
            Rational::one()
        } else if (x, y) == (Gen::l(-2), Gen::l(2)) {
            -Rational::one()
        } else {
            return b;
        };
        match b.iter_mut().find(|(g, _)| g.kind == Kind::L) {
            Some((_, c)) => *c = &*c + &shift,
            None => b.push((Gen::l(0), shift)),
        }
        b
    }
}
