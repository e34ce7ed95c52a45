//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::scalar::Field;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

/// Output of [`ExactMatrix::rank_det_kernel`].
#[derive(Clone, Debug)]
pub struct RankDetKernel<S: Field> {
    pub rank: usize,
    /// Only present for square matrices.
    pub det: Option<S>,
    /// Column vectors spanning the right kernel.
    pub kernel_basis: Vec<ExactMatrix<S>>,
}

impl<S: Field> ExactMatrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dim(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn column(entries: Vec<S>) -> Self {
        ExactMatrix {
            rows: entries.len(),
            cols: 1,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<T: Field>(&self, f: impl Fn(&S) -> T) -> ExactMatrix<T> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = &self[(r, c)];
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[r * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other.entries[k * other.cols + c];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * other.cols + c;
                    let prod = a.clone() * b;
                    out.entries[idx] = std::mem::replace(&mut out.entries[idx], S::zero()) + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dim(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|e| e.clone() * s)
    }

    /// Kronecker product; row index `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a.clone() * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Result<S> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::dim("trace of product needs compatible transposed shapes"));
        }
        let mut acc = S::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let b = &other[(k, i)];
                if !b.is_zero() {
                    acc = acc + &(a.clone() * b);
                }
            }
        }
        Ok(acc)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].try_inv().expect("non-zero pivot");
            for c in col..m.cols {
                let v = std::mem::replace(&mut m[(row, c)], S::zero());
                m[(row, c)] = v * &inv;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let t = m[(row, c)].clone() * &f;
                    let v = std::mem::replace(&mut m[(r, c)], S::zero());
                    m[(r, c)] = v - t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}` as column vectors.
    pub fn kernel(&self) -> Vec<Self> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                Self::column(v)
            })
            .collect()
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::dim(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(S::one());
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(p) => {
                        m.swap_rows(k, p);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(S::zero()),
                }
            }
            let inv_prev = prev.try_inv().expect("previous pivot is non-zero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[(i, j)].clone() * &m[(k, k)] - m[(i, k)].clone() * &m[(k, j)];
                    m[(i, j)] = v * &inv_prev;
                }
                m[(i, k)] = S::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if sign_flip { -d } else { d })
    }

    pub fn rank_det_kernel(&self) -> RankDetKernel<S> {
        let kernel_basis = self.kernel();
        RankDetKernel {
            rank: self.cols - kernel_basis.len(),
            det: self.det().ok(),
            kernel_basis,
        }
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        if rhs.rows != self.rows {
            return Err(Error::dim("right-hand side has the wrong number of rows"));
        }
        let n = self.cols;
        let aug = Self::from_fn(self.rows, n + rhs.cols, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - n)].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Self::zeros(n, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(p, c)] = red[(i, n + c)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::dim("inverse of a non-square matrix"));
        }
        match self.solve(&Self::identity(self.rows))? {
            Some(x) if self.rank() == self.rows => Ok(x),
            _ => Err(Error::NotInvertible {
                reason: "singular matrix".into(),
                witness: self
                    .kernel()
                    .first()
                    .map(|v| v.entries.iter().map(|e| e.to_string()).collect())
                    .unwrap_or_default(),
            }),
        }
    }

    /// Matrix with entries selected by row/column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }
}

impl<S> Index<(usize, usize)> for ExactMatrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.entries[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for ExactMatrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.entries[r * self.cols + c]
    }
}

impl<S: Field> fmt::Debug for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, Rational};
    use num_traits::Zero;

    fn q(rows: usize, cols: usize, v: &[i64]) -> ExactMatrix<Rational> {
        ExactMatrix::new(rows, cols, v.iter().map(|&x| rat(x, 1)).collect()).unwrap()
    }

    #[test]
    fn identity_case() {
        let r = ExactMatrix::<Rational>::identity(2).rank_det_kernel();
        assert_eq!(r.rank, 2);
        assert_eq!(r.det, Some(rat(1, 1)));
        assert!(r.kernel_basis.is_empty());
    }

    #[test]
    fn zero_case() {
        let r = ExactMatrix::<Rational>::zeros(2, 2).rank_det_kernel();
        assert_eq!(r.rank, 0);
        assert!(r.det.unwrap().is_zero());
        assert_eq!(r.kernel_basis.len(), 2);
    }

    #[test]
    fn non_square_det_is_a_dimension_error() {
        let m = q(2, 3, &[1, 2, 3, 4, 5, 6]);
        assert!(matches!(m.det(), Err(Error::Dimension(_))));
        let r = m.rank_det_kernel();
        assert_eq!(r.rank, 2);
        assert!(r.det.is_none());
        assert_eq!(r.kernel_basis.len(), 1);
        assert!(m.matmul(&r.kernel_basis[0]).unwrap().is_zero());
    }

    #[test]
    fn bareiss_with_pivoting() {
        let m = q(3, 3, &[0, 2, 1, 1, 0, 0, 3, 1, 4]);
        // expansion along the second row: -1 * (2*4 - 1*1) = -7
        assert_eq!(m.det().unwrap(), rat(-7, 1));
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).unwrap().is_identity());
    }

    #[test]
    fn singular_inverse_reports_witness() {
        let m = q(2, 2, &[1, 2, 2, 4]);
        match m.inverse() {
            Err(Error::NotInvertible { witness, .. }) => assert_eq!(witness.len(), 2),
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn kron_shape_and_trace() {
        let a = q(2, 2, &[1, 2, 3, 4]);
        let b = q(2, 2, &[0, 1, 1, 0]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k[(1, 0)], rat(1, 1));
        assert_eq!(k[(3, 2)], rat(4, 1));
        assert_eq!(a.trace_of_product(&b).unwrap(), a.matmul(&b).unwrap().trace());
    }
}
