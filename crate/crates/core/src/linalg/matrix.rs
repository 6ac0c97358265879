//! Dense matrices over arbitrary-precision integers.
//!
//! Homomorphisms act on column vectors, so a matrix with `rows` rows and
//! `cols` columns sends a vector of length `cols` to one of length `rows`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    /// Row-major entries, `rows * cols` of them.
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major entries.
    ///
    /// # Panics
    /// If `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::from_vec(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Builds a matrix from a list of rows. The column count of an empty
    /// list is taken from `cols`.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(x);
            }
        }
        m
    }

    /// A single column built from a vector.
    pub fn column_vector(v: &[BigInt]) -> Self {
        Self::from_vec(v.len(), 1, v.to_vec())
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn set_column(&mut self, j: usize, v: &[BigInt]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
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

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in product: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
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
        out
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix::from_vec(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix::from_vec(self.rows, self.cols, data)
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::from_vec(self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix::from_vec(self.rows, self.cols, self.data.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u64) -> IntMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * cols + j] = self.get(i, j).clone();
            }
            for j in 0..other.cols {
                out.data[i * cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        out
    }

    /// `[self; other]`
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix::from_vec(self.rows + other.rows, self.cols, data)
    }

    pub fn block_diag(blocks: &[&IntMatrix]) -> IntMatrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &IntMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> IntMatrix {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.data[i * cols + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        IntMatrix::from_vec(idx.len(), self.cols, data)
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + jj] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Kronecker product, indexing `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * c;
            *self.get_mut(dst, j) += v;
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * c;
            *self.get_mut(i, dst) += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Largest absolute entry, zero for an empty matrix.
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Convenience constructor for vectors of small integers.
pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = a.transpose();
        assert_eq!(a.mul(&b), IntMatrix::from_i64(2, 2, &[14, 32, 32, 77]));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = IntMatrix::from_i64(3, 3, &[2, -1, 0, 1, 3, 4, 0, 5, -2]);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) = 2*(-26) + (-2) = -54
        assert_eq!(a.det(), BigInt::from(-54));
        assert_eq!(IntMatrix::zeros(0, 0).det(), BigInt::one());
    }

    #[test]
    fn det_with_zero_pivot() {
        let a = IntMatrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(a.det(), BigInt::from(-1));
    }

    #[test]
    fn kron_shape() {
        let a = IntMatrix::from_i64(1, 2, &[1, 3]);
        let b = IntMatrix::from_i64(2, 1, &[1, 1]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k, IntMatrix::from_i64(2, 2, &[1, 3, 1, 3]));
    }

    #[test]
    fn empty_matrices_compose() {
        let a = IntMatrix::zeros(3, 0);
        let b = IntMatrix::zeros(0, 2);
        assert_eq!(a.mul(&b), IntMatrix::zeros(3, 2));
    }
}
