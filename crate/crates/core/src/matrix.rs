//! Dense matrices over a finite field and the handful of elimination
//! routines the codes need: rank, reduced row echelon form, null spaces and
//! row-space membership.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{Elem, FiniteField};

/// Row-major dense matrix. The field is supplied per operation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows<R: AsRef<[Elem]>>(cols: usize, rows: impl IntoIterator<Item = R>) -> Result<Self> {
        let mut data = Vec::new();
        let mut n = 0;
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
            n += 1;
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn push_row(&mut self, r: &[Elem]) -> Result<()> {
        if self.rows == 0 && self.cols == 0 {
            self.cols = r.len();
        }
        if r.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: r.len(),
            });
        }
        self.data.extend_from_slice(r);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// The submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out[(i, jj)] = self[(i, j)];
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Row vector times matrix: `x * self`.
    pub fn left_mul(&self, f: &FiniteField, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: x.len(),
            });
        }
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &c) in x.iter().enumerate() {
            f.axpy(c, self.row(i), &mut out);
        }
        Ok(out)
    }

    /// Matrix times column vector: `self * x`.
    pub fn mul_vec(&self, f: &FiniteField, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(self
            .iter_rows()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    pub fn mul(&self, f: &FiniteField, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let (src, dst) = (self.row(i).to_vec(), out.row_mut(i));
            for (k, &c) in src.iter().enumerate() {
                f.axpy(c, other.row(k), dst);
            }
        }
        Ok(out)
    }

    /// Reduces in place to reduced row echelon form and returns the pivot
    /// columns. Zero rows are dropped, so afterwards `rows() == rank`.
    pub fn rref_in_place(&mut self, f: &FiniteField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self[(r, c)]).expect("pivot is nonzero");
            f.scale_in_place(inv, &mut self.row_mut(r)[c..]);
            let pivot_row = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if !factor.is_zero() {
                    let neg = f.neg(factor);
                    f.axpy(neg, &pivot_row, &mut self.row_mut(i)[c..]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(r * self.cols);
        self.rows = r;
        pivots
    }

    pub fn rref(&self, f: &FiniteField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place(f);
        (m, p)
    }

    /// Rank by forward elimination only.
    pub fn rank(&self, f: &FiniteField) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m[(r, c)]).expect("pivot is nonzero");
            let pivot_row: Vec<Elem> = m.row(r)[c..].iter().map(|&x| f.mul(inv, x)).collect();
            for i in r + 1..m.rows {
                let factor = m[(i, c)];
                if !factor.is_zero() {
                    let neg = f.neg(factor);
                    f.axpy(neg, &pivot_row, &mut m.row_mut(i)[c..]);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis, as rows, of `{x : self * x = 0}`.
    pub fn nullspace(&self, f: &FiniteField) -> Matrix {
        let (rref, pivots) = self.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Matrix::zeros(0, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(rref[(i, free)]);
            }
            out.push_row(&v).expect("row length matches");
        }
        out
    }

    /// Basis, as rows, of `{y : y * self = 0}`.
    pub fn left_nullspace(&self, f: &FiniteField) -> Matrix {
        self.transpose().nullspace(f)
    }

    pub fn inverse(&self, f: &FiniteField) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug[(i, n + i)] = Elem::ONE;
        }
        let pivots = aug.rref_in_place(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(aug.select_columns(&cols))
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = Elem;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        &mut self.data[i * self.cols + j]
    }
}

/// A row space held in reduced row echelon form, for repeated membership
/// queries.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(f: &FiniteField, m: &Matrix) -> Self {
        let (basis, pivots) = m.rref(f);
        RowSpace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.cols() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` lies in
    /// the space.
    pub fn residue(&self, f: &FiniteField, v: &[Elem]) -> Vec<Elem> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p];
            if !c.is_zero() {
                f.axpy(f.neg(c), self.basis.row(i), &mut r);
            }
        }
        r
    }

    pub fn contains(&self, f: &FiniteField, v: &[Elem]) -> bool {
        v.len() == self.len() && self.residue(f, v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the echelon basis, if `v` is in the space.
    pub fn coordinates(&self, f: &FiniteField, v: &[Elem]) -> Option<Vec<Elem>> {
        if !self.contains(f, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    pub fn contains_space(&self, f: &FiniteField, other: &Matrix) -> bool {
        other.iter_rows().all(|r| self.contains(f, r))
    }

    pub fn equals(&self, f: &FiniteField, other: &RowSpace) -> bool {
        self.dim() == other.dim() && self.len() == other.len() && self.contains_space(f, &other.basis)
    }
}
