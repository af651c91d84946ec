use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use serde_json::{json, Value};

use super::{GradedBasis, HighestWeight, VermaError};
use crate::algebra::{koszul, super_bracket, Element, Gen, Half, Kind, Word};
use crate::linalg::{rank, Matrix};
use crate::scalars::{ExactDiv, Field, Rational, Ring};

/// A homogeneous vector, in coordinates of the PBW basis of its degree.
#[derive(Clone, PartialEq, Debug)]
pub struct ModuleVector<R> {
    pub degree: Half,
    pub coords: Vec<R>,
}

impl<R: Ring> ModuleVector<R> {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &R) -> Self {
        ModuleVector { degree: self.degree, coords: self.coords.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding vectors of different degree");
        ModuleVector {
            degree: self.degree,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&R::one().neg()))
    }
}

type Sparse<R> = BTreeMap<Word, R>;

fn add_into<R: Ring>(acc: &mut Sparse<R>, w: Word, c: R) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&w) {
        Some(x) => {
            *x = x.add(&c);
            if x.is_zero() {
                acc.remove(&w);
            }
        }
        None => {
            acc.insert(w, c);
        }
    }
}

/// A Verma module, or the vacuum quotient by `⟨L(-1)v, G(-1/2)v⟩`, with
/// memoized generator action.
pub struct VermaModule<R: Ring> {
    hw: HighestWeight<R>,
    vacuum: bool,
    bases: RwLock<HashMap<i32, Arc<GradedBasis>>>,
    action: RwLock<HashMap<(Gen, Word), Arc<Sparse<R>>>>,
    raw_gram: RwLock<HashMap<i32, Arc<Matrix<R>>>>,
}

impl<R: Ring> VermaModule<R> {
    pub fn new(hw: HighestWeight<R>) -> Self {
        Self::build(hw, false)
    }

    /// The vacuum quotient; generators `L(-1)` and `G(-1/2)` kill `v`.
    pub fn vacuum(hw: HighestWeight<R>) -> Self {
        Self::build(hw, true)
    }

    fn build(hw: HighestWeight<R>, vacuum: bool) -> Self {
        VermaModule {
            hw,
            vacuum,
            bases: RwLock::new(HashMap::new()),
            action: RwLock::new(HashMap::new()),
            raw_gram: RwLock::new(HashMap::new()),
        }
    }

    pub fn highest_weight(&self) -> &HighestWeight<R> {
        &self.hw
    }

    pub fn is_vacuum(&self) -> bool {
        self.vacuum
    }

    pub fn basis(&self, d: Half) -> Arc<GradedBasis> {
        if let Some(b) = self.bases.read().unwrap().get(&d.0) {
            return b.clone();
        }
        let b = Arc::new(GradedBasis::new(d, self.vacuum));
        self.bases.write().unwrap().entry(d.0).or_insert(b).clone()
    }

    pub fn dim(&self, d: Half) -> usize {
        self.basis(d).len()
    }

    pub fn highest_weight_vector(&self) -> ModuleVector<R> {
        ModuleVector { degree: Half::ZERO, coords: vec![R::one()] }
    }

    pub fn zero_vector(&self, d: Half) -> ModuleVector<R> {
        ModuleVector { degree: d, coords: vec![R::zero(); self.dim(d)] }
    }

    /// `word · v` for a canonical lowering word.
    pub fn basis_vector(&self, word: &[Gen]) -> Result<ModuleVector<R>, VermaError> {
        let d = crate::algebra::word_weight(word);
        let b = self.basis(d);
        let i = b.index_of(word).ok_or_else(|| VermaError::NotBasisWord(super::basis::fmt_word(word)))?;
        let mut v = self.zero_vector(d);
        v.coords[i] = R::one();
        Ok(v)
    }

    fn cartan_value(&self, g: Gen, degree: Half) -> R {
        match g.kind {
            Kind::L => self.hw.h.add(&R::from_rational(&degree.to_rational())),
            Kind::A => self.hw.ha.clone(),
            Kind::CL => self.hw.cl.clone(),
            Kind::CA => self.hw.ca.clone(),
            Kind::CLA => self.hw.cla.clone(),
            _ => unreachable!("odd generators have no zero mode"),
        }
    }

    fn killed_on_vacuum(&self, g: Gen) -> bool {
        self.vacuum && (g == Gen::l(-1) || g == Gen::g(-1))
    }

    /// `g · (w v)` as a sparse combination of basis words.
    fn apply_word(&self, g: Gen, w: &[Gen]) -> Arc<Sparse<R>> {
        let key = (g, w.to_vec());
        if let Some(r) = self.action.read().unwrap().get(&key) {
            return r.clone();
        }
        let result = Arc::new(self.compute(g, w));
        self.action.write().unwrap().entry(key).or_insert(result).clone()
    }

    fn compute(&self, g: Gen, w: &[Gen]) -> Sparse<R> {
        let mut out = Sparse::new();
        if g.block() == crate::algebra::Block::Cartan {
            let c = self.cartan_value(g, crate::algebra::word_weight(w));
            add_into(&mut out, w.to_vec(), c);
            return out;
        }
        let Some((&y1, rest)) = w.split_first() else {
            if g.is_lowering() && !self.killed_on_vacuum(g) {
                out.insert(vec![g], R::one());
            }
            return out;
        };
        if g.is_lowering() && !self.killed_on_vacuum(g) {
            if g < y1 || (g == y1 && !g.is_odd()) {
                let mut w2 = vec![g];
                w2.extend_from_slice(w);
                out.insert(w2, R::one());
                return out;
            }
            if g == y1 {
                // g g = [g, g] / 2 for odd g
                let half = Rational::frac(1, 2);
                for (b, k) in super_bracket(g, g) {
                    for (w2, c) in self.apply_word(b, rest).iter() {
                        add_into(&mut out, w2.clone(), c.scale(&(&k * &half)));
                    }
                }
                return out;
            }
        }
        // g y1 w' = ± y1 (g w') + [g, y1] w'
        let sign = Rational::from(koszul(g, y1));
        for (w2, c) in self.apply_word(g, rest).iter() {
            for (w3, c3) in self.apply_word(y1, w2).iter() {
                add_into(&mut out, w3.clone(), c.mul(c3).scale(&sign));
            }
        }
        for (b, k) in super_bracket(g, y1) {
            for (w2, c) in self.apply_word(b, rest).iter() {
                add_into(&mut out, w2.clone(), c.scale(&k));
            }
        }
        out
    }

    fn to_sparse(&self, v: &ModuleVector<R>) -> Vec<(Word, R)> {
        let b = self.basis(v.degree);
        v.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (b.word(i).clone(), c.clone())).collect()
    }

    fn from_sparse(&self, degree: Half, s: &Sparse<R>) -> ModuleVector<R> {
        let b = self.basis(degree);
        let mut v = self.zero_vector(degree);
        for (w, c) in s {
            let i = b.index_of(w).expect("action lands in the PBW basis");
            v.coords[i] = v.coords[i].add(c);
        }
        v
    }

    /// `g · v`; a negative target degree gives the empty zero vector.
    pub fn apply(&self, g: Gen, v: &ModuleVector<R>) -> ModuleVector<R> {
        let target = v.degree + g.weight();
        if target.0 < 0 {
            return ModuleVector { degree: target, coords: Vec::new() };
        }
        let mut acc = Sparse::new();
        for (w, c) in self.to_sparse(v) {
            for (w2, c2) in self.apply_word(g, &w).iter() {
                add_into(&mut acc, w2.clone(), c.mul(c2));
            }
        }
        self.from_sparse(target, &acc)
    }

    /// `x · v` for a homogeneous element of U(SH).
    pub fn act(&self, x: &Element<R>, v: &ModuleVector<R>) -> Result<ModuleVector<R>, VermaError> {
        let weight = x.weight().ok_or(VermaError::Inhomogeneous)?;
        let target = v.degree + weight;
        if v.degree.0 < 0 && target.0 >= 0 {
            return Ok(self.zero_vector(target));
        }
        let mut acc = Sparse::new();
        if target.0 >= 0 {
            for (word, coeff) in x.terms() {
                let mut cur: Sparse<R> = self.to_sparse(v).into_iter().collect();
                for &g in word.iter().rev() {
                    let mut next = Sparse::new();
                    for (w, c) in &cur {
                        for (w2, c2) in self.apply_word(g, w).iter() {
                            add_into(&mut next, w2.clone(), c.mul(c2));
                        }
                    }
                    cur = next;
                    if cur.is_empty() {
                        break;
                    }
                }
                for (w, c) in cur {
                    add_into(&mut acc, w, c.mul(coeff));
                }
            }
        }
        if target.0 < 0 {
            return Ok(ModuleVector { degree: target, coords: Vec::new() });
        }
        Ok(self.from_sparse(target, &acc))
    }

    /// `x · v` with `v` the highest-weight vector.
    pub fn act_on_hw(&self, x: &Element<R>) -> Result<ModuleVector<R>, VermaError> {
        self.act(x, &self.highest_weight_vector())
    }

    /// Matrix of `g` from degree `d` to degree `d + wt(g)`.
    pub fn action_matrix(&self, g: Gen, d: Half) -> Matrix<R> {
        let target = d + g.weight();
        let src = self.basis(d);
        if target.0 < 0 {
            return Matrix::zeros(0, src.len());
        }
        let dst = self.basis(target);
        let mut m: Matrix<R> = Matrix::zeros(dst.len(), src.len());
        for (j, w) in src.words().iter().enumerate() {
            for (w2, c) in self.apply_word(g, w).iter() {
                let i = dst.index_of(w2).expect("action lands in the PBW basis");
                m.set(i, j, m.get(i, j).add(c));
            }
        }
        m
    }

    /// All raising generators with mode at most `⌈d⌉`.
    pub fn raising_generators(d: Half) -> Vec<Gen> {
        let mut out = Vec::new();
        for n in 1..=d.ceil().max(1) {
            out.push(Gen::l(n));
            out.push(Gen::a(n));
            out.push(Gen::g(2 * n - 1));
            out.push(Gen::p(2 * n - 1));
        }
        out
    }

    /// Stacked matrices of all raising generators of mode at most `⌈d⌉`.
    pub fn raising_matrix(&self, d: Half) -> Matrix<R> {
        let mut m: Matrix<R> = Matrix::zeros(0, self.dim(d));
        for g in Self::raising_generators(d) {
            m = m.vstack(&self.action_matrix(g, d)).expect("same column count");
        }
        m
    }

    /// Gram matrix of the contravariant pairing at degree `d`, rows and
    /// columns indexed by the PBW basis.
    ///
    /// The anti-involution sends `G(s) ↦ -i G(-s)` and `Ψ(s) ↦ i Ψ(-s)`. Row
    /// `x` therefore carries `i^{n_odd(x)}`; the global factor `i^{2d mod 2}`
    /// is dropped so entries stay rational.
    pub fn gram(&self, d: Half) -> Matrix<R> {
        let raw = self.raw_gram_matrix(d);
        let b = self.basis(d);
        let eps = (d.0.rem_euclid(2)) as usize;
        let mut out = (*raw).clone();
        for (i, w) in b.words().iter().enumerate() {
            let odd = w.iter().filter(|g| g.is_odd()).count();
            if ((odd - eps) / 2) % 2 == 1 {
                for j in 0..out.cols() {
                    out.set(i, j, out.get(i, j).neg());
                }
            }
        }
        out
    }

    /// Same recursion without the powers of `i`:
    /// `B[x₁x', y] = u(x₁) Σ_z (x₁^† y)_z B[x', z]`.
    fn raw_gram_matrix(&self, d: Half) -> Arc<Matrix<R>> {
        if let Some(m) = self.raw_gram.read().unwrap().get(&d.0) {
            return m.clone();
        }
        let b = self.basis(d);
        let mut m: Matrix<R> = Matrix::zeros(b.len(), b.len());
        if d.0 == 0 {
            m.set(0, 0, R::one());
        } else {
            for (i, x) in b.words().iter().enumerate() {
                let x1 = x[0];
                let rest = &x[1..];
                let sub_d = d + x1.mode();
                let sub = self.raw_gram_matrix(sub_d);
                let sub_b = self.basis(sub_d);
                let row = sub_b.index_of(rest).expect("suffix of a basis word");
                let unit = match x1.kind {
                    Kind::A | Kind::G => R::one().neg(),
                    _ => R::one(),
                };
                let dagger = x1.flipped();
                for (j, y) in b.words().iter().enumerate() {
                    let mut acc = R::zero();
                    for (z, c) in self.apply_word(dagger, y).iter() {
                        let k = sub_b.index_of(z).expect("action lands in the PBW basis");
                        let s = sub.get(row, k);
                        if !s.is_zero() {
                            acc = acc.add(&c.mul(s));
                        }
                    }
                    m.set(i, j, acc.mul(&unit));
                }
            }
        }
        let m = Arc::new(m);
        self.raw_gram.write().unwrap().entry(d.0).or_insert(m).clone()
    }

    pub fn gram_determinant(&self, d: Half) -> R
    where
        R: ExactDiv,
    {
        crate::linalg::determinant(&self.gram(d)).expect("square")
    }

    pub fn simple_dim(&self, d: Half) -> usize
    where
        R: Field,
    {
        rank(&self.gram(d))
    }

    pub fn vector_to_element(&self, v: &ModuleVector<R>) -> Element<R> {
        let mut e = Element::zero();
        for (w, c) in self.to_sparse(v) {
            e = e.add(&Element::word(&w, c));
        }
        e
    }

    pub fn vector_to_json(&self, v: &ModuleVector<R>) -> Value {
        json!({
            "degree": v.degree.to_string(),
            "basis_hash": self.basis(v.degree).hash(),
            "coords": v.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Human-readable form `c·W v + ...`.
    pub fn vector_to_string(&self, v: &ModuleVector<R>) -> String {
        let e = self.vector_to_element(v);
        format!("({})·v", e)
    }
}
