use std::cmp::Ordering;

use super::{ModuleVector, VermaError, VermaModule, WordShape};
use crate::algebra::{Block, Gen, Half, Kind};
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::scalars::Field;

/// Scale `v` so the coefficient of its leading PBW word is 1.
pub fn normalize_leading<F: Field>(m: &VermaModule<F>, v: &ModuleVector<F>) -> ModuleVector<F> {
    let b = m.basis(v.degree);
    let lead = (0..v.coords.len()).filter(|&i| !v.coords[i].is_zero()).max_by(|&i, &j| {
        let (a, c) = (WordShape::of(b.word(i)), WordShape::of(b.word(j)));
        a.cmp_leading(&c).then_with(|| j.cmp(&i))
    });
    match lead {
        Some(i) => v.scale(&v.coords[i].inv().expect("nonzero")),
        None => v.clone(),
    }
}

/// Basis of the vectors at degree `d` killed by every raising generator.
pub fn singular_vectors<F: Field>(m: &VermaModule<F>, d: Half) -> Vec<ModuleVector<F>> {
    kernel_basis(&m.raising_matrix(d))
        .into_iter()
        .map(|coords| normalize_leading(m, &ModuleVector { degree: d, coords }))
        .collect()
}

/// Rows spanning the functionals that vanish on `s`.
fn annihilator<F: Field>(s: &Subspace<F>) -> Matrix<F> {
    let n = s.ambient_dim();
    let rows: Vec<Vec<F>> = s.basis().cloned().collect();
    let m = Matrix::from_rows(n, rows).expect("consistent widths");
    Matrix::from_rows(n, kernel_basis(&m)).expect("consistent widths")
}

/// Vectors at degree `d` outside `s` and not singular, whose images under
/// every raising generator lie in `s`. One representative per class
/// modulo `s` plus the singular vectors.
pub fn subsingular_vectors<F: Field>(
    m: &VermaModule<F>,
    d: Half,
    s: &Submodule<F>,
) -> Result<Vec<ModuleVector<F>>, VermaError> {
    if d > s.truncation() {
        return Err(VermaError::AboveTruncation(d));
    }
    let n = m.dim(d);
    let mut stack = Matrix::zeros(0, n);
    for g in VermaModule::<F>::raising_generators(d) {
        let target = d - g.mode();
        if target.0 < 0 {
            continue;
        }
        let cond = annihilator(s.span(target)).mul(&m.action_matrix(g, d)).expect("shapes");
        stack = stack.vstack(&cond).expect("same column count");
    }
    let mut known = s.span(d).clone();
    for v in kernel_basis(&m.raising_matrix(d)) {
        known.insert(&v);
    }
    let mut out = Vec::new();
    for coords in kernel_basis(&stack) {
        if known.insert(&coords) {
            out.push(normalize_leading(m, &ModuleVector { degree: d, coords }));
        }
    }
    Ok(out)
}

/// A representative `w + s`, `s` in the span of `shifts`, whose images under
/// every raising generator lie in `target`; `None` when no such `s` exists.
pub fn refine_representative<F: Field>(
    m: &VermaModule<F>,
    w: &ModuleVector<F>,
    shifts: &[ModuleVector<F>],
    target: &Submodule<F>,
) -> Result<Option<ModuleVector<F>>, VermaError> {
    let d = w.degree;
    if d > target.truncation() {
        return Err(VermaError::AboveTruncation(d));
    }
    let mut columns: Vec<Vec<F>> = vec![Vec::new(); shifts.len() + 1];
    for g in VermaModule::<F>::raising_generators(d) {
        let t = d - g.mode();
        if t.0 < 0 {
            continue;
        }
        let cond = annihilator(target.span(t)).mul(&m.action_matrix(g, d)).expect("shapes");
        for (col, v) in columns.iter_mut().zip(shifts.iter().chain(std::iter::once(w))) {
            col.extend(cond.mul_vec(&v.coords).expect("shapes"));
        }
    }
    let rows = columns[0].len();
    if rows == 0 {
        return Ok(Some(w.clone()));
    }
    let system = Matrix::from_columns(rows, &columns).expect("equal lengths");
    let k = shifts.len();
    let Some(sol) = kernel_basis(&system).into_iter().find(|v| !v[k].is_zero()) else {
        return Ok(None);
    };
    let norm = sol[k].inv().expect("nonzero");
    let mut out = w.clone();
    for (c, s) in sol.iter().zip(shifts) {
        out = out.add(&s.scale(&c.mul(&norm)));
    }
    Ok(Some(out))
}

/// The submodule generated by homogeneous vectors, with graded spans up
/// to a truncation degree.
#[derive(Clone)]
pub struct Submodule<F> {
    generators: Vec<ModuleVector<F>>,
    truncation: Half,
    spans: Vec<Subspace<F>>,
}

fn gens_of_block(block: Block, max_weight: Half) -> Vec<Gen> {
    let mut out = Vec::new();
    for kind in [Kind::P, Kind::A, Kind::G, Kind::L] {
        let mut t = if kind.is_odd() { 1 } else { 2 };
        while t <= max_weight.0 {
            out.push(Gen { kind, twice: if block == Block::Raising { t } else { -t } });
            t += 2;
        }
    }
    out
}

impl<F: Field> Submodule<F> {
    /// `U(SH)·generators`, computed as lowering applied to the raising
    /// closure of the generators.
    pub fn generated(
        m: &VermaModule<F>,
        generators: Vec<ModuleVector<F>>,
        truncation: Half,
    ) -> Result<Self, VermaError> {
        let top = truncation.0.max(0) as usize;
        let mut spans: Vec<Subspace<F>> = (0..=top).map(|t| Subspace::new(m.dim(Half(t as i32)))).collect();
        for g in &generators {
            if g.degree > truncation {
                return Err(VermaError::AboveTruncation(g.degree));
            }
            spans[g.degree.0 as usize].insert(&g.coords);
        }
        for t in (1..=top).rev() {
            let d = Half(t as i32);
            let vecs: Vec<Vec<F>> = spans[t].basis().cloned().collect();
            for g in gens_of_block(Block::Raising, d) {
                let target = (d - g.mode()).0 as usize;
                let a = m.action_matrix(g, d);
                for v in &vecs {
                    let img = a.mul_vec(v).expect("shapes");
                    spans[target].insert(&img);
                }
            }
        }
        for t in 0..=top {
            let d = Half(t as i32);
            let vecs: Vec<Vec<F>> = spans[t].basis().cloned().collect();
            for g in gens_of_block(Block::Lowering, truncation - d) {
                let target = (d - g.mode()).0 as usize;
                let a = m.action_matrix(g, d);
                for v in &vecs {
                    let img = a.mul_vec(v).expect("shapes");
                    spans[target].insert(&img);
                }
            }
        }
        Ok(Submodule { generators, truncation, spans })
    }

    pub fn zero(m: &VermaModule<F>, truncation: Half) -> Self {
        Self::generated(m, Vec::new(), truncation).expect("no generators")
    }

    pub fn generators(&self) -> &[ModuleVector<F>] {
        &self.generators
    }

    pub fn truncation(&self) -> Half {
        self.truncation
    }

    pub fn span(&self, d: Half) -> &Subspace<F> {
        &self.spans[d.0 as usize]
    }

    pub fn dim(&self, d: Half) -> usize {
        self.span(d).dim()
    }

    pub fn contains(&self, v: &ModuleVector<F>) -> bool {
        match v.degree.cmp(&Half::ZERO) {
            Ordering::Less => true,
            _ if v.degree > self.truncation => panic!("degree above truncation"),
            _ => self.span(v.degree).contains(&v.coords),
        }
    }
}
