use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::ring::{Ring, Scalar};
use crate::error::Error;

/// Largest `rows * cols` any dense operation accepts.
pub const DENSE_LIMIT: usize = 5_000_000;

pub(crate) fn guard(rows: usize, cols: usize) -> Result<(), Error> {
    if rows.saturating_mul(cols) > DENSE_LIMIT {
        Err(Error::MatrixTooLarge { rows, cols })
    } else {
        Ok(())
    }
}

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, Error> {
        guard(rows, cols)?;
        if data.len() != rows * cols {
            return Err(Error::Invalid(alloc::format!("{} entries given for a {}x{} matrix", data.len(), rows, cols)));
        }
        if data.iter().any(|x| !ring.contains(x)) {
            return Err(Error::RingMismatch);
        }
        Ok(ExactMatrix { ring, rows, cols, data })
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        let data = (0..rows * cols).map(|_| ring.zero()).collect();
        ExactMatrix { ring, rows, cols, data }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_fn(ring: Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { ring, rows, cols, data }
    }

    /// Integer-literal constructor, mostly for tests and fixtures.
    pub fn from_i64_rows(ring: Ring, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(ring, r, c, |i, j| ring.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(ring: Ring, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(ring, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.ring.is_one(x)
                    } else {
                        self.ring.is_zero(x)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ComplexNotExactlyComposable(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        guard(self.rows, other.cols)?;
        let r = self.ring;
        let mut out = Self::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let r = self.ring;
        (0..self.rows)
            .map(|i| {
                let mut acc = r.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !r.is_zero(a) && !r.is_zero(b) {
                        acc = r.add(&acc, &r.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        self.zip_with(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        self.zip_with(other, |r, a, b| r.sub(a, b))
    }

    fn zip_with(
        &self,
        other: &ExactMatrix,
        f: impl Fn(Ring, &Scalar, &Scalar) -> Scalar,
    ) -> Result<ExactMatrix, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Invalid(alloc::format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(self.ring, a, b)).collect();
        Ok(ExactMatrix { ring: self.ring, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        let r = self.ring;
        let data = self.data.iter().map(|a| r.mul(a, c)).collect();
        ExactMatrix { ring: r, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> ExactMatrix {
        self.scale(&self.ring.from_i64(-1))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.ring, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> ExactMatrix {
        Self::from_fn(self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> ExactMatrix {
        Self::from_fn(self.ring, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn block_diag(&self, other: &ExactMatrix) -> ExactMatrix {
        let (r1, c1) = (self.rows, self.cols);
        Self::from_fn(self.ring, r1 + other.rows, c1 + other.cols, |i, j| {
            if i < r1 && j < c1 {
                self.get(i, j).clone()
            } else if i >= r1 && j >= c1 {
                other.get(i - r1, j - c1).clone()
            } else {
                self.ring.zero()
            }
        })
    }

    /// Kronecker product.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let r = self.ring;
        Self::from_fn(r, self.rows * other.rows, self.cols * other.cols, |i, j| {
            r.mul(self.get(i / other.rows, j / other.cols), other.get(i % other.rows, j % other.cols))
        })
    }

    /// Reinterprets the entries in another ring.
    pub fn convert(&self, to: Ring) -> Result<ExactMatrix, Error> {
        let data = self.data.iter().map(|x| to.convert(self.ring, x)).collect::<Result<Vec<_>, _>>()?;
        Ok(ExactMatrix { ring: to, rows: self.rows, cols: self.cols, data })
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

    /// row[a] += c * row[b]
    pub(crate) fn add_row_multiple(&mut self, a: usize, b: usize, c: &Scalar) {
        let r = self.ring;
        if r.is_zero(c) {
            return;
        }
        for j in 0..self.cols {
            let y = &self.data[b * self.cols + j];
            if r.is_zero(y) {
                continue;
            }
            let v = r.add(&self.data[a * self.cols + j], &r.mul(c, y));
            self.data[a * self.cols + j] = v;
        }
    }

    /// col[a] += c * col[b]
    pub(crate) fn add_col_multiple(&mut self, a: usize, b: usize, c: &Scalar) {
        let r = self.ring;
        if r.is_zero(c) {
            return;
        }
        for i in 0..self.rows {
            let y = &self.data[i * self.cols + b];
            if r.is_zero(y) {
                continue;
            }
            let v = r.add(&self.data[i * self.cols + a], &r.mul(c, y));
            self.data[i * self.cols + a] = v;
        }
    }

    pub(crate) fn scale_row(&mut self, a: usize, c: &Scalar) {
        let r = self.ring;
        for j in 0..self.cols {
            let v = r.mul(&self.data[a * self.cols + j], c);
            self.data[a * self.cols + j] = v;
        }
    }

    /// Entries rendered in the ring's textual form, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| self.ring.format(x)).collect()).collect()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix<{}> {}x{}", self.ring, self.rows, self.cols)?;
        for row in self.to_strings() {
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
