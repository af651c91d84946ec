use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::FreeFieldError;
use crate::algebra::{Half, Partition, SuperPartition};
use crate::scalars::Rational;

/// The lattice point `x_c·c + x_d·d`; `⟨c,d⟩ = 2`, `⟨c,c⟩ = ⟨d,d⟩ = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LatticePoint {
    pub coeff_c: Rational,
    pub coeff_d: Rational,
}

impl LatticePoint {
    pub fn new(coeff_c: Rational, coeff_d: Rational) -> Self {
        LatticePoint { coeff_c, coeff_d }
    }

    /// `v_{p,r} = e^{-((p+1)/2) d̄ + r c}` with `d̄ = d - ((c_L-3)/12) c`.
    pub fn v_pr(p: &Rational, r: &Rational, cl: &Rational) -> Self {
        let k = p + &Rational::one();
        let coeff_d = -(&k * &Rational::frac(1, 2));
        let coeff_c = r + &(&k * &(cl - &Rational::from(3)) * Rational::frac(1, 24));
        LatticePoint { coeff_c, coeff_d }
    }

    /// `⟨c, self⟩`, the eigenvalue of `c(0)`.
    pub fn pair_c(&self) -> Rational {
        &self.coeff_d * &Rational::from(2)
    }

    /// `⟨d, self⟩`, the eigenvalue of `d(0)`.
    pub fn pair_d(&self) -> Rational {
        &self.coeff_c * &Rational::from(2)
    }

    /// Shift by `(k/2)·c`.
    pub fn shifted(&self, k_half: i64) -> Self {
        LatticePoint { coeff_c: &self.coeff_c + &Rational::frac(k_half, 2), coeff_d: self.coeff_d.clone() }
    }

    /// L(0)-eigenvalue of the sector's top vector:
    /// `2 x_c x_d - ((c_L-3)/12) x_d + x_c`.
    pub fn conformal_weight(&self, cl: &Rational) -> Rational {
        let two = Rational::from(2);
        &(&(&two * &self.coeff_c) * &self.coeff_d)
            - &(&(&(cl - &Rational::from(3)) * &Rational::frac(1, 12)) * &self.coeff_d)
            + &self.coeff_c
    }

    /// Whether `c/2`-modes are integer (untwisted) on this sector.
    pub fn is_untwisted(&self) -> bool {
        self.coeff_d.is_integer()
    }

    pub fn to_json(&self) -> Value {
        json!({"c": self.coeff_c.to_string(), "d": self.coeff_d.to_string()})
    }
}

/// A monomial `φ⁺_{-λ⁺} φ⁻_{-λ⁻} d_{-μ⁺} c_{-μ⁻}` applied to the sector
/// vector. Fermion parts are twice the (positive) mode, strictly decreasing;
/// boson parts are weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FockMonomial {
    pub psi_plus: Vec<i32>,
    pub psi_minus: Vec<i32>,
    pub d_part: Vec<i32>,
    pub c_part: Vec<i32>,
}

impl FockMonomial {
    /// Degree, in twice units.
    pub fn twice_degree(&self) -> i32 {
        self.psi_plus.iter().sum::<i32>()
            + self.psi_minus.iter().sum::<i32>()
            + 2 * self.d_part.iter().sum::<i32>()
            + 2 * self.c_part.iter().sum::<i32>()
    }

    pub fn degree(&self) -> Half {
        Half(self.twice_degree())
    }

    pub fn is_odd(&self) -> bool {
        (self.psi_plus.len() + self.psi_minus.len()) % 2 == 1
    }

    pub fn c_partition(&self) -> Partition {
        Partition::new(self.c_part.clone()).expect("kept sorted")
    }

    pub fn d_partition(&self) -> Partition {
        Partition::new(self.d_part.clone()).expect("kept sorted")
    }

    pub fn psi_plus_parts(&self) -> SuperPartition {
        SuperPartition::new(self.psi_plus.iter().map(|&t| Half(t)).collect()).expect("kept sorted")
    }

    pub fn psi_minus_parts(&self) -> SuperPartition {
        SuperPartition::new(self.psi_minus.iter().map(|&t| Half(t)).collect()).expect("kept sorted")
    }

    /// All monomials of the given degree, in a fixed order.
    pub fn all_of_degree(d: Half) -> Vec<FockMonomial> {
        let n = d.twice();
        let mut out = Vec::new();
        for a in 0..=n {
            for pp in SuperPartition::all_of(a, 1, a) {
                for b in 0..=n - a {
                    for pm in SuperPartition::all_of(b, 1, b) {
                        let rest = n - a - b;
                        if rest % 2 != 0 {
                            continue;
                        }
                        let rest = rest / 2;
                        for e in 0..=rest {
                            for dp in Partition::all_of(e, 1, e) {
                                for cp in Partition::all_of(rest - e, 1, rest - e) {
                                    out.push(FockMonomial {
                                        psi_plus: pp.parts().iter().map(|h| h.twice()).collect(),
                                        psi_minus: pm.parts().iter().map(|h| h.twice()).collect(),
                                        d_part: dp.parts().to_vec(),
                                        c_part: cp.parts().to_vec(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, s: String| -> fmt::Result {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(&s)
        };
        for &t in &self.psi_plus {
            put(f, format!("φ⁺({})", Half(-t)))?;
        }
        for &t in &self.psi_minus {
            put(f, format!("φ⁻({})", Half(-t)))?;
        }
        for &n in &self.d_part {
            put(f, format!("d({})", -n))?;
        }
        for &n in &self.c_part {
            put(f, format!("c({})", -n))?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// An element of a Fock module `F_γ`: a combination of monomials over one
/// sector.
#[derive(Clone, PartialEq, Debug)]
pub struct FockVector {
    pub sector: LatticePoint,
    pub terms: BTreeMap<FockMonomial, Rational>,
}

impl FockVector {
    pub fn zero(sector: LatticePoint) -> Self {
        FockVector { sector, terms: BTreeMap::new() }
    }

    pub fn vacuum(sector: LatticePoint) -> Self {
        FockVector::monomial(sector, FockMonomial::default())
    }

    pub fn monomial(sector: LatticePoint, m: FockMonomial) -> Self {
        let mut v = FockVector::zero(sector);
        v.terms.insert(m, Rational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: FockMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum; the zero vector adopts the other sector.
    pub fn add(&self, other: &FockVector) -> FockVector {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.sector, other.sector, "adding vectors of different sectors");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> FockVector {
        let mut out = FockVector::zero(self.sector.clone());
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(m.clone(), x * c);
        }
        out
    }

    /// Largest degree among the terms, in twice units; 0 for the zero vector.
    pub fn max_twice_degree(&self) -> i32 {
        self.terms.keys().map(|m| m.twice_degree()).max().unwrap_or(0)
    }

    /// Common degree of the terms, `None` for mixed degrees.
    pub fn degree(&self) -> Option<Half> {
        let mut ds = self.terms.keys().map(|m| m.degree());
        let first = ds.next().unwrap_or(Half::ZERO);
        ds.all(|d| d == first).then_some(first)
    }

    pub fn coefficient(&self, m: &FockMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coordinates in the basis [`FockMonomial::all_of_degree`].
    pub fn coords(&self, basis: &[FockMonomial]) -> Vec<Rational> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    /// Whether `other` is a rational multiple of `self` (or both vanish);
    /// returns the factor `λ` with `other = λ·self`.
    pub fn ratio_to(&self, other: &FockVector) -> Option<Rational> {
        if self.is_zero() {
            return other.is_zero().then(Rational::zero);
        }
        let (m, c) = self.terms.iter().next().expect("nonzero");
        let lambda = other.coefficient(m).checked_div(c).ok()?;
        (self.scale(&lambda) == *other).then_some(lambda)
    }

    pub fn to_json(&self) -> Value {
        let half = |v: &[i32]| v.iter().map(|&t| Half(t).to_string()).collect::<Vec<_>>();
        json!({
            "sector": self.sector.to_json(),
            "terms": self.terms.iter().map(|(m, c)| json!({
                "c_part": m.c_part,
                "d_part": m.d_part,
                "psip": half(&m.psi_plus),
                "psim": half(&m.psi_minus),
                "coeff": c.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{m}")?;
        }
        write!(f, " ⊗ e^{{{}c + {}d}}", self.sector.coeff_c, self.sector.coeff_d)
    }
}

/// The four free fields.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FreeField {
    C,
    D,
    PsiPlus,
    PsiMinus,
}

impl FreeField {
    pub fn is_odd(self) -> bool {
        matches!(self, FreeField::PsiPlus | FreeField::PsiMinus)
    }
}

fn insert_sorted_desc(v: &mut Vec<i32>, x: i32) {
    let pos = v.iter().position(|&y| y < x).unwrap_or(v.len());
    v.insert(pos, x);
}

fn remove_one(v: &mut Vec<i32>, x: i32) -> bool {
    match v.iter().position(|&y| y == x) {
        Some(i) => {
            v.remove(i);
            true
        }
        None => false,
    }
}

fn sign(n: usize) -> Rational {
    Rational::from(if n % 2 == 0 { 1 } else { -1 })
}

/// One free-field mode on one monomial; the result lies in the same sector.
///
/// Fermions are normalized by `{φ⁺(r), φ⁻(s)} = 2δ_{r+s,0}`, bosons by
/// `[c(m), d(n)] = 2m δ_{m+n,0}`; zero modes act by the pairing with the
/// sector.
pub(crate) fn mode_on_monomial(
    which: FreeField,
    twice: i32,
    sector: &LatticePoint,
    m: &FockMonomial,
) -> Option<(FockMonomial, Rational)> {
    let mut out = m.clone();
    match which {
        FreeField::C | FreeField::D => {
            let n = twice / 2;
            let (own, other) = match which {
                FreeField::C => (&mut out.c_part, &mut out.d_part),
                _ => (&mut out.d_part, &mut out.c_part),
            };
            if n < 0 {
                insert_sorted_desc(own, -n);
                Some((out, Rational::one()))
            } else if n == 0 {
                let z = match which {
                    FreeField::C => sector.pair_c(),
                    _ => sector.pair_d(),
                };
                (!z.is_zero()).then_some((out, z))
            } else {
                let mult = other.iter().filter(|&&y| y == n).count();
                if mult == 0 {
                    return None;
                }
                remove_one(other, n);
                Some((out, Rational::from((2 * n as usize * mult) as i64)))
            }
        }
        FreeField::PsiPlus | FreeField::PsiMinus => {
            let plus = which == FreeField::PsiPlus;
            let np = out.psi_plus.len();
            if twice < 0 {
                let s = -twice;
                let list = if plus { &mut out.psi_plus } else { &mut out.psi_minus };
                if list.contains(&s) {
                    return None;
                }
                let pos = list.iter().position(|&y| y < s).unwrap_or(list.len());
                list.insert(pos, s);
                let passed = if plus { pos } else { np + pos };
                Some((out, sign(passed)))
            } else {
                // annihilates the partner creation mode
                let list = if plus { &mut out.psi_minus } else { &mut out.psi_plus };
                let pos = list.iter().position(|&y| y == twice)?;
                list.remove(pos);
                let passed = if plus { np + pos } else { pos };
                Some((out, &sign(passed) * &Rational::from(2)))
            }
        }
    }
}

/// `free_mode_act`: one mode of one free field on a vector.
pub fn free_mode_act(which: FreeField, mode: Half, v: &FockVector) -> Result<FockVector, FreeFieldError> {
    let odd_mode = !mode.is_integer();
    if odd_mode != which.is_odd() {
        return Err(FreeFieldError::Parity(format!("{which:?} at mode {mode}")));
    }
    Ok(apply_mode(which, mode.twice(), v))
}

pub(crate) fn apply_mode(which: FreeField, twice: i32, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.sector.clone());
    for (m, c) in &v.terms {
        if let Some((m2, k)) = mode_on_monomial(which, twice, &v.sector, m) {
            out.add_term(m2, c * &k);
        }
    }
    out
}
