//! The Lie superalgebra SH: generators, super-brackets, partitions with their
//! orderings, and PBW normal ordering in the universal enveloping algebra.

mod bracket;
mod element;
mod identities;
mod partition;

pub use bracket::{super_bracket, Bracket, Brackets, StandardBrackets};
pub use element::{is_canonical, normal_order, normal_order_with, word_weight, Element, Word};
pub use identities::{check_antisymmetry, check_jacobi, generators_up_to, IdentityFailure};
pub use partition::{compare_pairs, pair_total_cmp, PairOrdering, Partition, PartitionError, SuperPartition};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::scalars::Rational;

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Half(pub i32);

impl Half {
    pub const ZERO: Half = Half(0);

    pub fn from_int(n: i32) -> Half {
        Half(2 * n)
    }

    pub fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Smallest integer not below the value.
    pub fn ceil(self) -> i32 {
        self.0.div_euclid(2) + (self.0.rem_euclid(2))
    }

    pub fn to_rational(self) -> Rational {
        Rational::frac(self.0 as i64, 2)
    }

    pub fn from_rational(q: &Rational) -> Option<Half> {
        q.twice_i32().map(Half)
    }

    /// All values `0, 1/2, 1, ..., self`.
    pub fn steps_up_to(self) -> impl Iterator<Item = Half> {
        (0..=self.0.max(-1)).map(Half)
    }
}

impl std::ops::Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl std::ops::Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl std::ops::Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Half {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let q: Rational = s.parse().map_err(|_| format!("cannot parse {s:?} as a half-integer"))?;
        Half::from_rational(&q).ok_or_else(|| format!("{s:?} is not a half-integer"))
    }
}

impl Serialize for Half {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Generator families. `A` is α, `P` is Ψ; the last three are the centrals
/// C_L, C_α, C_{L,α}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Kind {
    P,
    A,
    G,
    L,
    CL,
    CA,
    CLA,
}

impl Kind {
    pub fn is_odd(self) -> bool {
        matches!(self, Kind::G | Kind::P)
    }

    pub fn is_central(self) -> bool {
        matches!(self, Kind::CL | Kind::CA | Kind::CLA)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Kind::P => "P",
            Kind::A => "A",
            Kind::G => "G",
            Kind::L => "L",
            Kind::CL => "CL",
            Kind::CA => "CA",
            Kind::CLA => "CLa",
        }
    }
}

/// Triangular block of a generator: SH⁻, SH⁰ (with the centrals) or SH⁺.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Block {
    Lowering,
    Cartan,
    Raising,
}

/// A generator with its mode (twice the value; 0 for centrals).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gen {
    pub kind: Kind,
    pub twice: i32,
}

impl Gen {
    /// Validated constructor: even kinds need integer modes, odd kinds
    /// half-integer modes, centrals mode 0.
    pub fn new(kind: Kind, twice: i32) -> Option<Gen> {
        let ok = if kind.is_central() {
            twice == 0
        } else if kind.is_odd() {
            twice.rem_euclid(2) == 1
        } else {
            twice % 2 == 0
        };
        ok.then_some(Gen { kind, twice })
    }

    pub fn l(n: i32) -> Gen {
        Gen { kind: Kind::L, twice: 2 * n }
    }

    pub fn a(n: i32) -> Gen {
        Gen { kind: Kind::A, twice: 2 * n }
    }

    /// `G(t/2)`; `t` must be odd.
    pub fn g(t: i32) -> Gen {
        assert!(t.rem_euclid(2) == 1, "G needs a half-integer mode");
        Gen { kind: Kind::G, twice: t }
    }

    /// `Ψ(t/2)`; `t` must be odd.
    pub fn p(t: i32) -> Gen {
        assert!(t.rem_euclid(2) == 1, "Ψ needs a half-integer mode");
        Gen { kind: Kind::P, twice: t }
    }

    pub fn central(kind: Kind) -> Gen {
        assert!(kind.is_central());
        Gen { kind, twice: 0 }
    }

    pub fn mode(self) -> Half {
        Half(self.twice)
    }

    pub fn is_odd(self) -> bool {
        self.kind.is_odd()
    }

    pub fn block(self) -> Block {
        if self.kind.is_central() || self.twice == 0 {
            Block::Cartan
        } else if self.twice < 0 {
            Block::Lowering
        } else {
            Block::Raising
        }
    }

    pub fn is_lowering(self) -> bool {
        self.block() == Block::Lowering
    }

    pub fn is_raising(self) -> bool {
        self.block() == Block::Raising
    }

    /// The same family at the opposite mode.
    pub fn flipped(self) -> Gen {
        Gen { kind: self.kind, twice: -self.twice }
    }

    /// L(0)-adjoint eigenvalue: minus the mode.
    pub fn weight(self) -> Half {
        Half(-self.twice)
    }

    fn key(self) -> (Block, Kind, i32) {
        (self.block(), self.kind, self.twice)
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.is_central() {
            f.write_str(self.kind.symbol())
        } else {
            write!(f, "{}({})", self.kind.symbol(), self.mode())
        }
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Koszul sign for transposing `x` past `y`.
pub fn koszul(x: Gen, y: Gen) -> i64 {
    if x.is_odd() && y.is_odd() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_display_and_parse() {
        assert_eq!(Half(3).to_string(), "3/2");
        assert_eq!(Half(-4).to_string(), "-2");
        assert_eq!("5/2".parse::<Half>().unwrap(), Half(5));
        assert!("1/3".parse::<Half>().is_err());
        assert_eq!(Half(3).ceil(), 2);
        assert_eq!(Half(4).ceil(), 2);
        assert_eq!(Half(1).ceil(), 1);
    }

    #[test]
    fn canonical_generator_order() {
        let mut v = vec![Gen::l(-1), Gen::g(-1), Gen::a(-2), Gen::p(-3), Gen::l(1), Gen::l(0)];
        v.sort();
        assert_eq!(v, vec![Gen::p(-3), Gen::a(-2), Gen::g(-1), Gen::l(-1), Gen::l(0), Gen::l(1)]);
    }

    #[test]
    fn parity_validation() {
        assert!(Gen::new(Kind::G, 2).is_none());
        assert!(Gen::new(Kind::L, 1).is_none());
        assert!(Gen::new(Kind::CL, 1).is_none());
        assert!(Gen::new(Kind::P, -1).is_some());
    }
}
