//! Smith normal form with unimodular witnesses and their inverses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of reducing `a` to Smith form: `u * a * v == d`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl Smith {
    /// The diagonal of `d`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

/// Returns `(U, D, V)` with `D = U·A·V`.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = smith(a);
    (s.u, s.d, s.v)
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap_rows(i, k);
        self.u.swap_rows(i, k);
        self.u_inv.swap_cols(i, k);
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        self.a.swap_cols(j, k);
        self.v.swap_cols(j, k);
        self.v_inv.swap_rows(j, k);
    }

    /// row[dst] += c * row[src]
    fn row_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    /// col[dst] += c * col[src]
    fn col_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of a nonzero entry of least absolute value in the
    /// trailing block starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

pub fn smith(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut rank = 0;
    for t in 0..m.min(n) {
        let Some((pi, pj)) = w.min_pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            // Clear column t below the pivot.
            let mut dirty = false;
            for i in t + 1..m {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = w.a.get(i, t).div_floor(w.a.get(t, t));
                w.row_op(i, t, &-q);
                if !w.a.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for j in t + 1..n {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = w.a.get(t, j).div_floor(w.a.get(t, t));
                w.col_op(j, t, &-q);
                if !w.a.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A smaller remainder appeared in the pivot row or column.
                let mut best = (t, t, w.a.get(t, t).abs());
                for i in t + 1..m {
                    let x = w.a.get(i, t).abs();
                    if !x.is_zero() && x < best.2 {
                        best = (i, t, x);
                    }
                }
                for j in t + 1..n {
                    let x = w.a.get(t, j).abs();
                    if !x.is_zero() && x < best.2 {
                        best = (t, j, x);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            // Divisibility: the pivot must divide every trailing entry.
            let pivot = w.a.get(t, t).clone();
            let offender =
                (t + 1..m).find_map(|i| (t + 1..n).find(|&j| !w.a.get(i, j).is_multiple_of(&pivot)).map(|_| i));
            match offender {
                Some(i) => w.row_op(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        rank += 1;
    }
    Smith {
        u: w.u,
        u_inv: w.u_inv,
        d: w.a,
        v: w.v,
        v_inv: w.v_inv,
        rank,
    }
}

/// A basis (as columns) of the integer kernel `{x : a x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith(a);
    let idx: Vec<usize> = (s.rank..a.cols()).collect();
    s.v.select_cols(&idx)
}

/// A basis (as columns) of the lattice spanned by the columns of `a`.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith(a);
    let mut cols = Vec::with_capacity(s.rank);
    for i in 0..s.rank {
        let c: Vec<BigInt> = s.u_inv.column(i).iter().map(|x| x * s.d.get(i, i)).collect();
        cols.push(c);
    }
    let mut out = IntMatrix::zeros(a.rows(), s.rank);
    for (j, c) in cols.iter().enumerate() {
        out.set_column(j, c);
    }
    out
}

/// Some integer solution of `a x = b`, if one exists.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let s = smith(a);
    let c = s.u.apply(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < s.rank {
            let d = s.d.get(i, i);
            if !ci.is_multiple_of(d) {
                return None;
            }
            y[i] = ci / d;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(s.v.apply(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ints;

    fn check(a: &IntMatrix) -> Smith {
        let s = smith(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(a.cols()));
        let diag = s.diagonal();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                // zeros come last
                assert!(w[1].is_zero());
            }
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn two_by_two_example() {
        let a = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]);
        let s = check(&a);
        // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4.
        assert_eq!(s.diagonal(), ints(&[2, 4]));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(2, 2));
        assert_eq!(s.d, IntMatrix::zeros(2, 2));
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn rectangular_and_empty() {
        check(&IntMatrix::from_i64(2, 3, &[4, 6, 10, 2, 2, 2]));
        check(&IntMatrix::from_i64(3, 1, &[0, 6, 9]));
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(2, 0));
    }

    #[test]
    fn kernel_and_solve() {
        let a = IntMatrix::from_i64(1, 2, &[1, 3]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        let x = solve(&a, &ints(&[5])).unwrap();
        assert_eq!(a.apply(&x), ints(&[5]));
        let two = IntMatrix::from_i64(1, 1, &[2]);
        assert!(solve(&two, &ints(&[3])).is_none());
    }

    #[test]
    fn image_basis_of_dependent_columns() {
        let a = IntMatrix::from_i64(2, 3, &[2, 4, 6, 0, 0, 0]);
        let b = image_basis(&a);
        assert_eq!(b.cols(), 1);
        assert_eq!(b.column(0).iter().map(|x| x.abs()).collect::<Vec<_>>(), ints(&[2, 0]));
    }
}
