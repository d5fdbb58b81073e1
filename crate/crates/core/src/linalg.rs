//! Exact dense linear algebra: a rational elimination solver with scalar
//! right-hand sides, and square matrices over [`Scalar`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Rational, Scalar};

/// Solves `A x = b` for a rational matrix `A` and scalar vector `b`.
///
/// Returns `None` when the system is inconsistent or the solution is not
/// unique.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Scalar], ncols: usize) -> Option<Vec<Scalar>> {
    let mut rows: Vec<(Vec<Rational>, Scalar)> = a.iter().cloned().zip(b.iter().cloned()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r].0[col];
        let (row, rhs) = &mut rows[r];
        for x in row.iter_mut() {
            *x = &*x * &inv;
        }
        *rhs = rhs.scale(&inv);
        let (pivot_row, pivot_rhs) = rows[r].clone();
        for (i, (row, rhs)) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * y);
            }
            *rhs = &*rhs - &pivot_rhs.scale(&f);
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() < ncols || rows[r..].iter().any(|(_, rhs)| !rhs.is_zero()) {
        return None;
    }
    Some(rows.into_iter().take(ncols).map(|(_, rhs)| rhs).collect())
}

/// A square matrix over [`Scalar`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, data: vec![Scalar::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_columns(cols: &[Vec<Scalar>]) -> Self {
        let n = cols.len();
        let mut m = Matrix::zero(n);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.n + j] = x;
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.n {
            t += self.get(i, i);
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// `tr(self · o)` without forming the product.
    pub fn trace_product(&self, o: &Matrix) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = o.get(k, i);
                if !b.is_zero() {
                    t += &(a * b);
                }
            }
        }
        t
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.data[i * n + j] + &(a * b);
                        out.data[i * n + j] = cur;
                    }
                }
            }
        }
        out
    }
}
