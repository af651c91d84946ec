use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::{koszul, Brackets, Gen, Half, StandardBrackets};
use crate::scalars::{Rational, Ring};

/// An ordered product of generators.
pub type Word = Vec<Gen>;

/// An element of U(SH) as a combination of canonical PBW words.
#[derive(Clone, PartialEq)]
pub struct Element<R> {
    terms: BTreeMap<Word, R>,
}

impl<R: Ring> Default for Element<R> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

fn is_canonical_pair(x: Gen, y: Gen) -> bool {
    x < y || (x == y && !x.is_odd())
}

pub fn is_canonical(word: &[Gen]) -> bool {
    word.windows(2).all(|w| is_canonical_pair(w[0], w[1]))
}

impl<R: Ring> Element<R> {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn scalar(c: R) -> Self {
        let mut e = Element::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn one() -> Self {
        Element::scalar(R::one())
    }

    pub fn generator(g: Gen) -> Self {
        let mut e = Element::zero();
        e.add_term(vec![g], R::one());
        e
    }

    /// The product of `word` with coefficient `c`, normal ordered.
    pub fn word(word: &[Gen], c: R) -> Self {
        normal_order(word, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[Gen]) -> R {
        self.terms.get(word).cloned().unwrap_or_else(R::zero)
    }

    fn add_term(&mut self, word: Word, c: R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&R::one().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Element::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.mul(c));
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&R::from_rational(q))
    }

    /// Product in U(SH), normal ordered.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(other, &StandardBrackets)
    }

    pub fn mul_with<B: Brackets>(&self, other: &Self, brackets: &B) -> Self {
        let mut out = Element::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                let part = normal_order_with(&w, ca.mul(cb), brackets);
                for (w2, c2) in part.terms {
                    out.add_term(w2, c2);
                }
            }
        }
        out
    }

    /// Common weight of all terms, `None` for mixed weights; zero for the
    /// zero element.
    pub fn weight(&self) -> Option<Half> {
        let mut ws = self.terms.keys().map(|w| word_weight(w));
        let first = ws.next().unwrap_or(Half::ZERO);
        ws.all(|w| w == first).then_some(first)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Element<S> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    json!({
                        "coeff": c.to_string(),
                        "factors": w.iter().map(|g| json!({"kind": g.kind.symbol(), "mode": g.mode().to_string()})).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

/// Minus the sum of the modes.
pub fn word_weight(word: &[Gen]) -> Half {
    Half(-word.iter().map(|g| g.twice).sum::<i32>())
}

pub fn normal_order<R: Ring>(word: &[Gen], coeff: R) -> Element<R> {
    normal_order_with(word, coeff, &StandardBrackets)
}

/// Rewrites a word into canonical PBW form by adjacent transpositions
/// `xy = (-1)^{|x||y|} yx + [x, y]`, and `xx = [x, x]/2` for odd `x`.
pub fn normal_order_with<R: Ring, B: Brackets>(word: &[Gen], coeff: R, brackets: &B) -> Element<R> {
    let mut out = Element::zero();
    let mut stack: Vec<(Word, R)> = vec![(word.to_vec(), coeff)];
    while let Some((w, c)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| !is_canonical_pair(w[i], w[i + 1])) else {
            out.add_term(w, c);
            continue;
        };
        let (x, y) = (w[i], w[i + 1]);
        let half = Rational::frac(1, 2);
        if x == y {
            for (g, k) in brackets.bracket(x, x) {
                let mut w2 = w[..i].to_vec();
                w2.push(g);
                w2.extend_from_slice(&w[i + 2..]);
                stack.push((w2, c.scale(&(&k * &half))));
            }
            continue;
        }
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        stack.push((swapped, c.scale(&Rational::from(koszul(x, y)))));
        for (g, k) in brackets.bracket(x, y) {
            let mut w2 = w[..i].to_vec();
            w2.push(g);
            w2.extend_from_slice(&w[i + 2..]);
            stack.push((w2, c.scale(&k)));
        }
    }
    out
}

fn fmt_word(w: &[Gen]) -> String {
    w.iter().map(|g| g.to_string()).collect()
}

impl<R: Ring> fmt::Display for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let cs = c.to_string();
            let simple = !cs.contains(['/', ' ', '*', '^']);
            if w.is_empty() {
                write!(f, "{}", if simple { cs } else { format!("({})", cs) })?;
            } else if c.is_one() {
                f.write_str(&fmt_word(w))?;
            } else if cs == "-1" {
                write!(f, "-{}", fmt_word(w))?;
            } else if simple {
                write!(f, "{}*{}", cs, fmt_word(w))?;
            } else {
                write!(f, "({})*{}", cs, fmt_word(w))?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn reorder_virasoro_pair() {
        let e = normal_order(&[Gen::l(-1), Gen::l(-2)], q(1));
        let expected = Element::word(&[Gen::l(-2), Gen::l(-1)], q(1)).add(&Element::generator(Gen::l(-3)));
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "L(-3) + L(-2)L(-1)");
    }

    #[test]
    fn reorder_fermion_pair() {
        let e = normal_order(&[Gen::p(1), Gen::p(-1)], q(1));
        let expected = Element::word(&[Gen::p(-1), Gen::p(1)], q(-1)).add(&Element::generator(Gen::central(Kind::CA)));
        assert_eq!(e, expected);
    }

    #[test]
    fn odd_square() {
        assert_eq!(normal_order(&[Gen::g(1), Gen::g(1)], q(1)), Element::generator(Gen::l(1)));
    }

    #[test]
    fn weights() {
        let e = Element::word(&[Gen::p(-3), Gen::a(-2), Gen::g(-1)], q(1));
        assert_eq!(e.weight(), Some(Half(8)));
        assert_eq!(Element::<Rational>::generator(Gen::central(Kind::CL)).weight(), Some(Half(0)));
        assert_eq!(Element::<Rational>::generator(Gen::l(3)).weight(), Some(Half(-6)));
    }

    #[test]
    fn text_and_json() {
        let e = Element::word(&[Gen::p(-3), Gen::a(-2), Gen::g(-1)], Rational::frac(1, 2));
        assert_eq!(e.to_string(), "(1/2)*P(-3/2)A(-2)G(-1/2)");
        let j = e.to_json();
        assert_eq!(j[0]["factors"][0]["mode"], "-3/2");
        assert_eq!(j[0]["coeff"], "1/2");
    }
}
