use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LatticeError;

/// Dense integer matrix, row-major, arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length. `cols` is needed for the empty case.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Result<Self, LatticeError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LatticeError::RaggedRow { row: i, expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(IntegerMatrix { rows: rows.len(), cols, data })
    }

    /// Convenience constructor for small literal matrices.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(cols, &big).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn checked_mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix, LatticeError> {
        if self.cols != other.rows {
            return Err(LatticeError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Some(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Some(sign * a.get(n - 1, n - 1))
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.determinant(), Some(d) if d.abs().is_one())
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }

    /// Replaces rows (a, b) by (p·a + q·b, r·a + s·b).
    pub(crate) fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self.data[a * self.cols + j].clone();
            let y = self.data[b * self.cols + j].clone();
            self.data[a * self.cols + j] = p * &x + q * &y;
            self.data[b * self.cols + j] = r * x + s * y;
        }
    }

    /// Replaces columns (a, b) by (p·a + q·b, r·a + s·b).
    pub(crate) fn combine_cols(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for i in 0..self.rows {
            let x = self.data[i * self.cols + a].clone();
            let y = self.data[i * self.cols + b].clone();
            self.data[i * self.cols + a] = p * &x + q * &y;
            self.data[i * self.cols + b] = r * x + s * y;
        }
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;
    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
