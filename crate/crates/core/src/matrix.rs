//! Dense row-major matrix storage and the small set of arithmetic it needs.
//!
//! Everything here is sized for matrices of dimension up to a few dozen;
//! there is no blocking, no SIMD dispatch, and no sparse path.

use crate::error::{Error, Result};

/// Dense real matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major data, validating shape and finiteness.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if !data.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    /// Internal constructor for values produced by our own arithmetic.
    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_raw(rows, cols, vec![0.0; rows * cols])
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let d = entries.len();
        let mut m = Self::zeros(d, d);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * d + i] = x;
        }
        m
    }

    /// Builds a square matrix from nested row slices.
    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(r, c, data)
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

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: f64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self::from_raw(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self::from_raw(self.rows, self.cols, data)
    }

    pub fn scale(&self, factor: f64) -> Self {
        let data = self.data.iter().map(|a| a * factor).collect();
        Self::from_raw(self.rows, self.cols, data)
    }

    /// Adds `factor * other` into `self` in place.
    pub fn add_scaled_assign(&mut self, other: &Self, factor: f64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += factor * b;
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = vec![0.0; n * m];
        for i in 0..n {
            let a_row = &self.data[i * k..(i + 1) * k];
            let out_row = &mut out[i * m..(i + 1) * m];
            for (l, &a) in a_row.iter().enumerate() {
                let b_row = &other.data[l * m..(l + 1) * m];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Self::from_raw(n, m, out)
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum::<f64>()
            })
            .collect()
    }

    /// K-th matrix power by binary exponentiation; `pow(0)` is the identity.
    pub fn pow(&self, exponent: u64) -> Self {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        result
    }

    /// Symmetric part `(m + m^T) / 2`.
    pub fn symmetric_part(&self) -> Self {
        assert!(self.is_square());
        let d = self.rows;
        let mut out = Self::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                out.data[i * d + j] = 0.5 * (self.get(i, j) + self.get(j, i));
            }
        }
        out
    }

    /// Skew-symmetric part `(m - m^T) / 2`.
    pub fn skew_part(&self) -> Self {
        assert!(self.is_square());
        let d = self.rows;
        let mut out = Self::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                out.data[i * d + j] = 0.5 * (self.get(i, j) - self.get(j, i));
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    /// Largest absolute entrywise difference; matrices must share a shape.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// Largest `|a_ij - a_ji|` over the square matrix.
    pub fn max_asymmetry(&self) -> f64 {
        assert!(self.is_square());
        let d = self.rows;
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in (i + 1)..d {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Checks `a_ij == a_ji` within `tol * max(1, max_abs)`.
    pub fn is_symmetric_within(&self, tol: f64) -> bool {
        self.is_square() && self.max_asymmetry() <= tol * self.max_abs().max(1.0)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

/// Sum of squared commutators `sum_{i != j} (M_i M_j - M_j M_i)^2` over all
/// ordered pairs of a symmetric family. Each commutator is skew-symmetric, so
/// the result is symmetric negative semidefinite.
pub fn commutator_square_sum(members: &[DenseMatrix]) -> Result<DenseMatrix> {
    let first = members.first().ok_or(Error::DimensionMismatch {
        expected: 1,
        found: 0,
    })?;
    let d = first.rows();
    for m in members {
        if !m.is_square() || m.rows() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: m.rows(),
            });
        }
        if !m.is_symmetric_within(1e-12) {
            return Err(Error::NotSymmetric {
                asymmetry: m.max_asymmetry(),
            });
        }
    }
    let mut sum = DenseMatrix::zeros(d, d);
    for (i, mi) in members.iter().enumerate() {
        for (j, mj) in members.iter().enumerate() {
            if i == j {
                continue;
            }
            let commutator = mi.matmul(mj).sub(&mj.matmul(mi));
            sum.add_assign(&commutator.matmul(&commutator));
        }
    }
    Ok(sum)
}
