use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::algebra::{pair_total_cmp, Gen, Half, Kind, Partition, SuperPartition, Word};

/// PBW words `Ψ_{-λ⁻} α_{-μ⁻} G_{-λ⁺} L_{-μ⁺}` of one weight, applied to
/// the highest-weight vector.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedBasis {
    degree: Half,
    vacuum: bool,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

/// The four partitions carried by a lowering word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordShape {
    pub lambda_minus: SuperPartition,
    pub mu_minus: Partition,
    pub lambda_plus: SuperPartition,
    pub mu_plus: Partition,
}

impl WordShape {
    pub fn of(word: &[Gen]) -> WordShape {
        let ints = |k: Kind| {
            let parts = word.iter().filter(|g| g.kind == k).map(|g| -g.twice / 2).collect();
            Partition::new(parts).expect("lowering word")
        };
        let halves = |k: Kind| {
            let parts = word.iter().filter(|g| g.kind == k).map(|g| Half(-g.twice)).collect();
            SuperPartition::new(parts).expect("lowering word")
        };
        WordShape {
            lambda_minus: halves(Kind::P),
            mu_minus: ints(Kind::A),
            lambda_plus: halves(Kind::G),
            mu_plus: ints(Kind::L),
        }
    }

    /// Total order used to pick the leading word: first the pair
    /// `(μ⁺, λ⁺)`, then `(μ⁻, λ⁻)`.
    pub fn cmp_leading(&self, other: &WordShape) -> Ordering {
        pair_total_cmp((&self.mu_plus, &self.lambda_plus), (&other.mu_plus, &other.lambda_plus))
            .then_with(|| pair_total_cmp((&self.mu_minus, &self.lambda_minus), (&other.mu_minus, &other.lambda_minus)))
    }
}

/// Lowering generators that may occur at weight `d`, in canonical order.
fn lowering_gens(d: Half, vacuum: bool) -> Vec<Gen> {
    let mut gens = Vec::new();
    for kind in [Kind::P, Kind::A, Kind::G, Kind::L] {
        let mut t = if kind.is_odd() { 1 } else { 2 };
        while t <= d.0 {
            let g = Gen { kind, twice: -t };
            let excluded = vacuum && (g == Gen::l(-1) || g == Gen::g(-1));
            if !excluded {
                gens.push(g);
            }
            t += 2;
        }
    }
    gens.sort();
    gens
}

impl GradedBasis {
    pub fn new(degree: Half, vacuum: bool) -> GradedBasis {
        assert!(degree.0 >= 0, "negative degree");
        let gens = lowering_gens(degree, vacuum);
        let mut words = Vec::new();
        let mut cur = Vec::new();
        fn rec(gens: &[Gen], start: usize, left: i32, cur: &mut Word, out: &mut Vec<Word>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..gens.len() {
                let g = gens[i];
                let w = -g.twice;
                if w > left {
                    continue;
                }
                cur.push(g);
                rec(gens, if g.is_odd() { i + 1 } else { i }, left - w, cur, out);
                cur.pop();
            }
        }
        rec(&gens, 0, degree.0, &mut cur, &mut words);
        words.sort();
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        GradedBasis { degree, vacuum, words, index }
    }

    pub fn degree(&self) -> Half {
        self.degree
    }

    pub fn is_vacuum(&self) -> bool {
        self.vacuum
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn index_of(&self, word: &[Gen]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Short digest identifying the word list, for serialized vectors.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.degree.to_string());
        h.update([self.vacuum as u8]);
        for w in &self.words {
            for g in w {
                h.update(g.to_string());
            }
            h.update(b";");
        }
        hex::encode(&h.finalize()[..8])
    }
}

pub(crate) fn fmt_word(w: &[Gen]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Debug for GradedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.words.iter().map(|w| fmt_word(w)).collect();
        write!(f, "GradedBasis({}, [{}])", self.degree, words.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qchar::{char_vacuum, char_verma};

    #[test]
    fn small_bases() {
        let b = GradedBasis::new(Half(1), false);
        assert_eq!(b.words().to_vec(), vec![vec![Gen::p(-1)], vec![Gen::g(-1)]]);
        let b = GradedBasis::new(Half(2), false);
        assert_eq!(b.len(), 3);
        assert!(b.words().contains(&vec![Gen::p(-1), Gen::g(-1)]));
        let v = GradedBasis::new(Half(2), true);
        assert_eq!(v.words().to_vec(), vec![vec![Gen::a(-1)]]);
    }

    #[test]
    fn sizes_match_characters() {
        let verma = char_verma(Half(10));
        let vac = char_vacuum(Half(10));
        for d in Half(10).steps_up_to() {
            assert_eq!(verma.coefficient(d), GradedBasis::new(d, false).len().into());
            assert_eq!(vac.coefficient(d), GradedBasis::new(d, true).len().into());
        }
    }

    #[test]
    fn shapes() {
        let w = vec![Gen::p(-3), Gen::p(-1), Gen::a(-2), Gen::l(-3), Gen::l(-3)];
        let s = WordShape::of(&w);
        assert_eq!(s.lambda_minus.parts(), &[Half(3), Half(1)]);
        assert_eq!(s.mu_minus.parts(), &[2]);
        assert_eq!(s.mu_plus.parts(), &[3, 3]);
        assert!(s.lambda_plus.is_empty());
    }
}
