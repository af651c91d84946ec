//! Dense exact linear algebra: rank, kernel, span membership and
//! fraction-free determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::{ExactDiv, Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, got: entries.len() });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<R>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: n, cols, entries })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<R>]) -> Result<Self, LinalgError> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, got: col.len() });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(R::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix<R>) -> Result<Matrix<R>, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out: Matrix<R> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<R>) -> Result<Matrix<R>, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form; returns the reduced matrix and its pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.entries.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a.get(r, c).inv().expect("nonzero pivot");
        for j in c..a.cols {
            let x = a.get(r, j).mul(&inv);
            a.set(r, j, x);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                let pj = a.get(r, j);
                if pj.is_zero() {
                    continue;
                }
                let x = a.get(i, j).sub(&f.mul(pj));
                a.set(i, j, x);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

/// Basis of the right null space, one vector per free column.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (a, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); m.cols];
            v[f] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = a.get(r, f).neg();
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the column span of `m`.
pub fn in_span<F: Field>(v: &[F], m: &Matrix<F>) -> Result<bool, LinalgError> {
    if v.len() != m.rows {
        return Err(LinalgError::DimensionMismatch { expected: m.rows, got: v.len() });
    }
    if v.iter().all(|x| x.is_zero()) {
        return Ok(true);
    }
    let mut cols: Vec<Vec<F>> = (0..m.cols).map(|j| m.column(j)).collect();
    let before = rank(&Matrix::from_columns(m.rows, &cols)?);
    cols.push(v.to_vec());
    let after = rank(&Matrix::from_columns(m.rows, &cols)?);
    Ok(before == after)
}

/// Determinant by Bareiss fraction-free elimination with pivot search; all
/// intermediate entries stay in the ring, so polynomial inputs give
/// polynomial intermediates.
pub fn determinant<R: ExactDiv>(m: &Matrix<R>) -> Result<R, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return Ok(R::zero());
        };
        if p != k {
            for j in 0..n {
                a.entries.swap(p * n + j, k * n + j);
            }
            sign = !sign;
        }
        let akk = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let num = a.get(i, j).mul(&akk).sub(&aik.mul(a.get(k, j)));
                let q = num.div_exact(&prev).expect("Bareiss division is exact");
                a.set(i, j, q);
            }
            a.set(i, k, R::zero());
        }
        prev = akk;
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if sign { d.neg() } else { d })
}

/// Determinant of a rational matrix: each row is scaled to integers and
/// the elimination runs over `BigInt`, which avoids the gcd work of
/// rational arithmetic.
pub fn rational_determinant(m: &Matrix<Rational>) -> Result<Rational, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut scale = BigInt::one();
    let mut a: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        let l = m.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for x in m.row(i) {
            a.push(x.numer() * (&l / x.denom()));
        }
        scale *= l;
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            sign = !sign;
        }
        let akk = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = std::mem::take(&mut a[i * n + k]);
            for j in k + 1..n {
                let num = &a[i * n + j] * &akk - &aik * &a[k * n + j];
                a[i * n + j] = num / &prev;
            }
        }
        prev = akk;
    }
    let d = if n == 0 { BigInt::one() } else { a[n * n - 1].clone() };
    let d = Rational::from_bigint(if sign { -d } else { d });
    Ok(&d / &Rational::from_bigint(scale))
}

/// Incrementally maintained subspace of `F^n` in echelon form; membership and
/// insertion are single reductions against the stored rows.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Subspace<F> {
    pub fn new(ambient_dim: usize) -> Self {
        Subspace { dim: ambient_dim, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (pc, row) in &self.rows {
            if w[*pc].is_zero() {
                continue;
            }
            let f = w[*pc].clone();
            for (j, x) in row.iter().enumerate().skip(*pc) {
                if !x.is_zero() {
                    w[j] = w[j].sub(&f.mul(x));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let w = self.reduce(v);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pc].inv().expect("nonzero");
        let w: Vec<F> = w.iter().map(|x| x.mul(&inv)).collect();
        // keep earlier rows reduced at the new pivot so `reduce` stays one pass
        for (_, row) in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let f = row[pc].clone();
                for j in pc..self.dim {
                    if !w[j].is_zero() {
                        row[j] = row[j].sub(&f.mul(&w[j]));
                    }
                }
            }
        }
        self.rows.push((pc, w));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<F>> {
        self.rows.iter().map(|(_, r)| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{ParamPolynomial, Parameter, Rational};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&Matrix::<Rational>::identity(2)), 2);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&Matrix::<Rational>::zeros(0, 3)), 0);
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&Matrix::<Rational>::identity(3)).is_empty());
        assert_eq!(kernel_basis(&mat(&[&[1, 1]])), vec![vec![q(-1), q(1)]]);
        assert_eq!(kernel_basis(&mat(&[&[0, 0]])).len(), 2);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&Matrix::<Rational>::identity(3)).unwrap(), q(1));
        let x = ParamPolynomial::var(Parameter::CL);
        let y = ParamPolynomial::var(Parameter::R);
        let m = Matrix::from_rows(
            2,
            vec![vec![ParamPolynomial::zero(), x.clone()], vec![y.clone(), ParamPolynomial::zero()]],
        )
        .unwrap();
        assert_eq!(determinant(&m).unwrap(), x.mul(&y).neg());
        assert!(determinant(&mat(&[&[1, 2]])).is_err());
    }

    #[test]
    fn span_membership() {
        assert!(in_span(&[q(1), q(1)], &Matrix::identity(2)).unwrap());
        assert!(!in_span(&[q(1), q(0)], &mat(&[&[0], &[1]])).unwrap());
        assert!(in_span::<Rational>(&[], &Matrix::zeros(0, 0)).unwrap());
        assert!(in_span(&[q(1)], &Matrix::identity(2)).is_err());
    }

    #[test]
    fn subspace_matches_rank() {
        let mut s = Subspace::new(3);
        assert!(s.insert(&[q(1), q(2), q(3)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert!(!s.insert(&[q(1), q(3), q(4)]));
        assert!(s.contains(&[q(2), q(5), q(7)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.dim(), 2);
    }
}
