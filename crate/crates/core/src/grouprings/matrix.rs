use std::fmt;

use super::ring::Ring;

/// Dense square-or-rectangular matrix over a [`Ring`], row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: &R) -> Self {
        Matrix { rows, cols, data: vec![value.clone(); rows * cols] }
    }

    pub fn identity(n: usize, one: &R) -> Self {
        let zero = one.zero_like();
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&other.data[0].one_like().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let zero = self.data.first().or(other.data.first()).map(|x| x.zero_like());
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = zero.clone().unwrap();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc.add_assign(&a.mul(other.get(k, j)));
            }
            acc
        })
    }

    /// Submatrix with the given rows and columns (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division is exact in an integral domain; `div_exact` failing
    /// would indicate a non-domain coefficient ring and panics.
    pub fn det(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            // no entry to borrow a context from; callers handle 0x0 separately
            panic!("determinant of an empty matrix needs a ring context");
        }
        bareiss(self.clone())
    }

    /// Determinant, with `one` supplying the value for a 0×0 matrix.
    pub fn det_or(&self, one: &R) -> R {
        if self.rows == 0 {
            one.clone()
        } else {
            self.det()
        }
    }

    /// Inverse over a field, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let one = self.data[0].one_like();
        let mut a = self.clone();
        let mut inv = Self::identity(n, &one);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).clone();
            for j in 0..n {
                let v = a.get(col, j).div_exact(&p)?;
                a.set(col, j, v);
                let w = inv.get(col, j).div_exact(&p)?;
                inv.set(col, j, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, v);
                    let w = inv.get(r, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(r, j, w);
                }
            }
        }
        Some(inv)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }
}

fn bareiss<R: Ring>(mut a: Matrix<R>) -> R {
    let n = a.rows;
    let one = a.data[0].one_like();
    let mut sign = 1;
    let mut prev = one.clone();
    for k in 0..n {
        if a.get(k, k).is_zero() {
            match ((k + 1)..n).find(|&r| !a.get(r, k).is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    sign = -sign;
                }
                None => return one.zero_like(),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in (k + 1)..n {
            let aik = a.get(i, k).clone();
            for j in (k + 1)..n {
                let num = pivot.mul(a.get(i, j)).sub(&aik.mul(a.get(k, j)));
                let v = num.div_exact(&prev).expect("inexact Bareiss division");
                a.set(i, j, v);
            }
            a.set(i, k, one.zero_like());
        }
        prev = pivot;
    }
    a.get(n - 1, n - 1).signed(sign)
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix").field("rows", &self.rows).field("cols", &self.cols).field("data", &self.data).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprings::field::NumberField;

    #[test]
    fn det_and_inverse_over_q() {
        let k = NumberField::rationals();
        let m = Matrix::from_rows(vec![
            vec![k.from_int(2), k.from_int(1), k.from_int(0)],
            vec![k.from_int(1), k.from_int(3), k.from_int(1)],
            vec![k.from_int(0), k.from_int(1), k.from_int(4)],
        ]);
        assert_eq!(m.det(), k.from_int(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3, &k.one()));
    }

    #[test]
    fn det_needs_pivoting() {
        let k = NumberField::rationals();
        let m = Matrix::from_rows(vec![vec![k.from_int(0), k.from_int(1)], vec![k.from_int(1), k.from_int(0)]]);
        assert_eq!(m.det(), k.from_int(-1));
        let singular = Matrix::from_rows(vec![vec![k.from_int(1), k.from_int(2)], vec![k.from_int(2), k.from_int(4)]]);
        assert!(singular.det().is_zero());
        assert!(singular.inverse().is_none());
    }
}
