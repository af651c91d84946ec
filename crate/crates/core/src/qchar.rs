//! Truncated q-series with half-integer exponents, the character formulas,
//! and Schur polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::{Half, Partition};
use crate::scalars::{Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QCharError {
    #[error("p must be a nonzero integer")]
    ZeroP,
    #[error("no computed dimension supplied for degree {0}")]
    MissingDegree(Half),
}

/// `q^{offset} · Σ_d coeffs[2d] q^d`, known exactly up to `truncation`.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    offset: Option<String>,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn one(truncation: Half) -> Self {
        let mut coeffs = vec![BigInt::zero(); truncation.0.max(0) as usize + 1];
        coeffs[0] = BigInt::one();
        QSeries { offset: None, coeffs }
    }

    pub fn truncation(&self) -> Half {
        Half(self.coeffs.len() as i32 - 1)
    }

    pub fn with_offset(mut self, offset: impl fmt::Display) -> Self {
        self.offset = Some(offset.to_string());
        self
    }

    pub fn offset(&self) -> Option<&str> {
        self.offset.as_deref()
    }

    /// Coefficient of `q^d` (relative to the offset); zero for negative `d`.
    pub fn coefficient(&self, d: Half) -> BigInt {
        assert!(d <= self.truncation(), "coefficient beyond truncation");
        if d.0 < 0 {
            BigInt::zero()
        } else {
            self.coeffs[d.0 as usize].clone()
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        QSeries { offset: self.offset.clone(), coeffs: out }
    }

    /// Multiply by `1 + c·q^{t/2}`.
    fn mul_binomial(&self, c: i64, t: usize) -> QSeries {
        let mut out = self.coeffs.clone();
        for i in (t..out.len()).rev() {
            let add = &self.coeffs[i - t] * c;
            out[i] += add;
        }
        QSeries { offset: self.offset.clone(), coeffs: out }
    }

    /// Divide by `1 - q^{t/2}`.
    fn div_one_minus(&self, t: usize) -> QSeries {
        let mut out = self.coeffs.clone();
        for i in t..out.len() {
            let add = out[i - t].clone();
            out[i] += add;
        }
        QSeries { offset: self.offset.clone(), coeffs: out }
    }

    /// Whether every coefficient is at most the corresponding one of `other`.
    pub fn le(&self, other: &QSeries) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "offset": self.offset,
            "truncation": self.truncation().to_string(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(h) = &self.offset {
            write!(f, "q^{{{}}} · ", h)?;
        }
        let mut parts = Vec::new();
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (t, mag.is_one()) {
                (0, _) => mag.to_string(),
                (2, true) => "q".to_string(),
                (2, false) => format!("{mag}·q"),
                (_, true) => format!("q^{}", exponent(Half(t as i32))),
                (_, false) => format!("{}·q^{}", mag, exponent(Half(t as i32))),
            };
            parts.push((sign, body));
        }
        f.write_str("(")?;
        for (i, (sign, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *sign == "-" {
                    f.write_str("-")?;
                }
                f.write_str(body)?;
            } else {
                write!(f, " {} {}", sign, body)?;
            }
        }
        write!(f, " + O(q^{}))", exponent(Half(self.coeffs.len() as i32)))
    }
}

fn exponent(d: Half) -> String {
    if d.0 % 2 == 0 {
        d.to_string()
    } else {
        format!("{{{d}}}")
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `∏_{k≥1} (1 + q^{k-1/2})² / (1 - q^k)²` up to `truncation`.
pub fn char_verma(truncation: Half) -> QSeries {
    let mut s = QSeries::one(truncation);
    let n = truncation.0.max(0) as usize;
    let mut k = 1;
    while 2 * k - 1 <= n {
        s = s.mul_binomial(1, 2 * k - 1).mul_binomial(1, 2 * k - 1);
        if 2 * k <= n {
            s = s.div_one_minus(2 * k).div_one_minus(2 * k);
        }
        k += 1;
    }
    s
}

/// Character of the universal vertex algebra: `(1 - q^{1/2})` times the
/// Verma product.
pub fn char_vacuum(truncation: Half) -> QSeries {
    char_verma(truncation).mul_binomial(-1, 1)
}

/// Character of the simple quotient for nonzero integer `p`: the Verma
/// product times `1 - q^{|p|/2}` (odd `p`) or `1 - q^{|p|}` (even `p`).
pub fn char_simple(p: i64, truncation: Half) -> Result<QSeries, QCharError> {
    if p == 0 {
        return Err(QCharError::ZeroP);
    }
    let shift = if p % 2 != 0 { p.unsigned_abs() } else { 2 * p.unsigned_abs() } as usize;
    let v = char_verma(truncation);
    Ok(if shift < v.coeffs.len() { v.mul_binomial(-1, shift) } else { v })
}

/// Number of PBW monomials of weight `d` in the lowering algebra.
pub fn kostant_p2(d: Half) -> u64 {
    char_verma(d).coefficient(d).to_u64().expect("small count")
}

/// Schur polynomial `S_r` in the symbols `x(-1), x(-2), ...`, each symbol
/// pre-multiplied by `scale`. A term `(μ, c)` stands for
/// `c · x(-μ_1) ⋯ x(-μ_ℓ)`. Empty for `r < 0`.
pub fn schur_expand<R: Ring>(r: i64, scale: &R) -> Vec<(Partition, R)> {
    if r < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mu in Partition::all_of(r as i32, 1, r as i32) {
        // 1 / ∏_k k^{m_k} m_k!
        let mut denom = Rational::one();
        let parts = mu.parts();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i];
            let mut m = 0;
            while i < parts.len() && parts[i] == k {
                m += 1;
                i += 1;
                denom = &denom * &Rational::from((k * m) as i64);
            }
        }
        let mut c = R::from_rational(&denom.inv().expect("positive"));
        for _ in 0..mu.len() {
            c = c.mul(scale);
        }
        out.push((mu, c));
    }
    out
}

/// Per-degree comparison of a series against computed dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct DimReport {
    pub rows: Vec<DimRow>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DimRow {
    pub degree: Half,
    pub expected: BigInt,
    pub computed: usize,
}

impl DimRow {
    pub fn ok(&self) -> bool {
        self.expected == BigInt::from(self.computed)
    }
}

impl DimReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.ok())
    }

    pub fn failing_degrees(&self) -> Vec<Half> {
        self.rows.iter().filter(|r| !r.ok()).map(|r| r.degree).collect()
    }
}

impl fmt::Display for DimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let mark = if r.ok() { "" } else { " MISMATCH" };
                format!("{}: {} vs {}{}", r.degree, r.expected, r.computed, mark)
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

pub fn compare_dims(series: &QSeries, dims: &[(Half, usize)]) -> Result<DimReport, QCharError> {
    let mut rows = Vec::new();
    for d in series.truncation().steps_up_to() {
        let computed = dims.iter().find(|(e, _)| *e == d).map(|(_, n)| *n).ok_or(QCharError::MissingDegree(d))?;
        rows.push(DimRow { degree: d, expected: series.coefficient(d), computed });
    }
    Ok(DimReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &QSeries) -> Vec<i64> {
        s.coefficients().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn verma_coefficients() {
        assert_eq!(coeffs(&char_verma(Half(12))), vec![1, 2, 3, 6, 11, 18, 28, 44, 69, 104, 152, 222, 323]);
    }

    #[test]
    fn vacuum_and_simple() {
        assert_eq!(coeffs(&char_vacuum(Half(3))), vec![1, 1, 1, 3]);
        assert_eq!(coeffs(&char_simple(1, Half(3)).unwrap()), vec![1, 1, 1, 3]);
        assert_eq!(coeffs(&char_simple(2, Half(4)).unwrap()), vec![1, 2, 3, 6, 10]);
        assert_eq!(char_simple(-3, Half(8)).unwrap(), char_simple(3, Half(8)).unwrap());
        assert!(char_simple(0, Half(2)).is_err());
    }

    #[test]
    fn kostant_values() {
        assert_eq!((0..4).map(|t| kostant_p2(Half(t))).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn schur_low_orders() {
        let one = Rational::one();
        let s2 = schur_expand(2, &one);
        assert_eq!(s2.len(), 2);
        assert!(s2.iter().all(|(_, c)| *c == Rational::frac(1, 2)));
        assert!(schur_expand(-1, &one).is_empty());
        assert_eq!(schur_expand(0, &one), vec![(Partition::empty(), one.clone())]);
    }

    #[test]
    fn perturbed_dims_fail() {
        let s = char_simple(1, Half(3)).unwrap();
        let good = [(Half(0), 1), (Half(1), 1), (Half(2), 1), (Half(3), 3)];
        assert!(compare_dims(&s, &good).unwrap().pass());
        let bad = [(Half(0), 1), (Half(1), 1), (Half(2), 2), (Half(3), 3)];
        assert_eq!(compare_dims(&s, &bad).unwrap().failing_degrees(), vec![Half(2)]);
        assert!(compare_dims(&s, &good[..2]).is_err());
    }

    #[test]
    fn display_form() {
        let s = char_verma(Half(2)).with_offset("h");
        assert_eq!(s.to_string(), "q^{h} · (1 + 2·q^{1/2} + 3·q + O(q^{3/2}))");
    }
}
