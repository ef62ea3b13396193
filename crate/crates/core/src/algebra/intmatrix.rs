use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bareiss_rank;
use super::rational::is_integer;
use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix row {i}");
            for (j, x) in row.iter().enumerate() {
                m.data[i * cols + j] = x.clone().into();
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix column {j}");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    /// Entry as `i64`; panics on overflow.
    pub fn get_i64(&self, i: usize, j: usize) -> i64 {
        self.get(i, j).to_i64().expect("entry fits in i64")
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] = v.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_i64(&self, i: usize) -> Vec<i64> {
        (0..self.cols).map(|j| self.get_i64(i, j)).collect()
    }

    pub fn column_i64(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get_i64(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, &b)| a * BigInt::from(b)).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(self.to_rows())
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == BigInt::from((i == j) as i32)))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>())).finish()
    }
}

/// Exact inverse of a square integer matrix with determinant `+1` or `-1`.
pub fn inverse_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let det = m.determinant()?;
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular);
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    let v = if j < n { m.get(i, j).clone() } else { BigInt::from((j - n == i) as i32) };
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero()).expect("nonsingular");
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                for j in 0..2 * n {
                    let delta = &factor * &a[col][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    let mut out = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let x = &a[i][n + j];
            debug_assert!(is_integer(x));
            out.set(i, j, x.to_integer());
        }
    }
    Ok(out)
}

/// Solves `M z = u` through the square block of `M` on `rows`.
///
/// The block must be unimodular; `z` is `block^-1 * u[rows]`, and the full
/// system (every row of `M`) is checked afterwards.
pub fn integer_solve_in_lattice(m: &IntMatrix, u: &[i64], rows: &[usize]) -> Result<Vec<i64>> {
    assert_eq!(u.len(), m.rows(), "right-hand side has wrong length");
    let cols: Vec<usize> = (0..m.cols()).collect();
    let block = m.submatrix(rows, &cols);
    let inv = inverse_unimodular(&block)?;
    let rhs: Vec<i64> = rows.iter().map(|&r| u[r]).collect();
    let z: Vec<i64> = inv.mul_vec(&rhs).iter().map(|x| x.to_i64().expect("solution fits in i64")).collect();
    let back = m.mul_vec(&z);
    if back.iter().zip(u).any(|(a, &b)| *a != BigInt::from(b)) {
        return Err(Error::InconsistentSystem(format!("M*z != u for z = {z:?}")));
    }
    Ok(z)
}
