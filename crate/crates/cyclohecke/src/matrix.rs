//! Dense matrices over an exact field, with multiplication that skips zero
//! entries (the seminormal generator matrices have at most two nonzero
//! entries per column, so this keeps large verifications cheap), plus
//! Gaussian elimination for rank, inverse and exact linear solving.

use num::{BigRational, One, Zero};

use crate::scalar::RatFn;

/// An exact field with instance-carried constants (a [`RatFn`] needs to know
/// its parameter count to produce 0 and 1, hence `zero_like`/`one_like`).
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Field for RatFn {
    fn zero_like(&self) -> Self {
        RatFn::zero(self.m())
    }
    fn one_like(&self) -> Self {
        RatFn::one(self.m())
    }
    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("arity")
    }
    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("arity")
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("arity")
    }
    fn neg(&self) -> Self {
        RatFn::neg(self)
    }
    fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero")
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
}

impl Field for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, like: &T) -> Self {
        let zero = like.zero_like();
        Matrix { rows, cols, data: vec![zero; rows * cols] }
    }

    pub fn identity(n: usize, like: &T) -> Self {
        let mut m = Self::zeros(n, n, like);
        for i in 0..n {
            *m.at_mut(i, i) = like.one_like();
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        assert!(n > 0, "diagonal matrix needs at least one entry");
        let mut m = Self::zeros(n, n, &entries[0]);
        for (i, e) in entries.iter().enumerate() {
            *m.at_mut(i, i) = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn map<U: Field>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| f(x)).collect() }
    }

    pub fn try_map<U: Field, E>(
        &self,
        mut f: impl FnMut(&T) -> Result<U, E>,
    ) -> Result<Matrix<U>, E> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            data.push(f(x)?);
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).add(other.at(r, c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).sub(other.at(r, c)))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    /// Product, skipping zero entries of both factors.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let exemplar = self.data.first().or(other.data.first()).expect("nonempty");
        let mut out = Self::zeros(self.rows, other.cols, exemplar);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    let acc = out.at_mut(r, c);
                    *acc = acc.add(&prod);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, vec: &[T]) -> Vec<T> {
        assert_eq!(self.cols, vec.len(), "shape mismatch");
        let zero = vec[0].zero_like();
        let mut out = vec![zero; self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || vec[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(&vec[c]));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let one = match self.data.first() {
            Some(x) => x.one_like(),
            None => return true,
        };
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.at(r, c);
                if r == c {
                    if *e != one {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = self.data[0].zero_like();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    /// First entry where the two matrices differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.at(r, c) != other.at(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Row-echelon rank by Gaussian elimination (exact arithmetic).
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let pivot = (rank..a.rows).find(|&r| !a.at(r, col).is_zero());
            let Some(p) = pivot else { continue };
            for c in 0..a.cols {
                let tmp = a.at(p, c).clone();
                *a.at_mut(p, c) = a.at(rank, c).clone();
                *a.at_mut(rank, c) = tmp;
            }
            let inv = a.at(rank, col).inv();
            for c in col..a.cols {
                let x = a.at(rank, c).mul(&inv);
                *a.at_mut(rank, c) = x;
            }
            for r in 0..a.rows {
                if r != rank && !a.at(r, col).is_zero() {
                    let factor = a.at(r, col).clone();
                    for c in col..a.cols {
                        let x = a.at(r, c).sub(&factor.mul(a.at(rank, c)));
                        *a.at_mut(r, c) = x;
                    }
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }

    pub fn nullspace_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let like = &self.data[0];
        let mut a = self.clone();
        let mut b = Self::identity(n, like);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for c in 0..n {
                    let tmp = a.at(pivot, c).clone();
                    *a.at_mut(pivot, c) = a.at(col, c).clone();
                    *a.at_mut(col, c) = tmp;
                    let tmp = b.at(pivot, c).clone();
                    *b.at_mut(pivot, c) = b.at(col, c).clone();
                    *b.at_mut(col, c) = tmp;
                }
            }
            let inv = a.at(col, col).inv();
            for c in 0..n {
                let x = a.at(col, c).mul(&inv);
                *a.at_mut(col, c) = x;
                let x = b.at(col, c).mul(&inv);
                *b.at_mut(col, c) = x;
            }
            for r in 0..n {
                if r != col && !a.at(r, col).is_zero() {
                    let factor = a.at(r, col).clone();
                    for c in 0..n {
                        let x = a.at(r, c).sub(&factor.mul(a.at(col, c)));
                        *a.at_mut(r, c) = x;
                        let x = b.at(r, c).sub(&factor.mul(b.at(col, c)));
                        *b.at_mut(r, c) = x;
                    }
                }
            }
        }
        Some(b)
    }

    /// Solves `self * x = rhs` (one column); `None` when inconsistent or
    /// underdetermined.
    pub fn solve(&self, rhs: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, rhs.len(), "shape mismatch");
        let like = rhs.first()?;
        let mut a = self.clone();
        let mut b = rhs.to_vec();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            let pivot = (row..a.rows).find(|&r| !a.at(r, col).is_zero());
            let Some(p) = pivot else { continue };
            if p != row {
                for c in 0..a.cols {
                    let tmp = a.at(p, c).clone();
                    *a.at_mut(p, c) = a.at(row, c).clone();
                    *a.at_mut(row, c) = tmp;
                }
                b.swap(p, row);
            }
            let inv = a.at(row, col).inv();
            for c in col..a.cols {
                let x = a.at(row, c).mul(&inv);
                *a.at_mut(row, c) = x;
            }
            b[row] = b[row].mul(&inv);
            for r in 0..a.rows {
                if r != row && !a.at(r, col).is_zero() {
                    let factor = a.at(r, col).clone();
                    for c in col..a.cols {
                        let x = a.at(r, c).sub(&factor.mul(a.at(row, c)));
                        *a.at_mut(r, c) = x;
                    }
                    b[r] = b[r].sub(&factor.mul(&b[row]));
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == a.rows {
                break;
            }
        }
        // Underdetermined: a free column exists.
        if pivot_cols.len() != a.cols {
            return None;
        }
        // Inconsistent: a zero row with nonzero rhs.
        for r in row..a.rows {
            if !b[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![like.zero_like(); a.cols];
        for (r, &col) in pivot_cols.iter().enumerate() {
            x[col] = b[r].clone();
        }
        Some(x)
    }
}
