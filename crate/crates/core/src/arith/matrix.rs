use super::{Rational, Ring, UniPoly};
use num_traits::{One, Zero};
use std::fmt;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows.start + i, cols.start + j).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reorders rows and columns simultaneously: entry `(i, j)` of the
    /// result is entry `(perm[i], perm[j])` of `self`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]).clone())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero_elem(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one_elem() } else { T::zero_elem() })
    }

    pub fn diagonal(d: Vec<T>) -> Self {
        let n = d.len();
        let mut m = Matrix::zeros(n, n);
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero_elem())
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero_elem() {
                        continue;
                    }
                    let v = out.get(i, j).add_ref(&a.mul_ref(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero_elem();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero_elem() && !b.is_zero_elem() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Matrix<T> {
        self.map(|x| x.mul_ref(s))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero_elem(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn pow(&self, k: u32) -> Matrix<T> {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rank by fraction-free (Bareiss) elimination. Valid over any integral
    /// domain whose `div_exact` is exact on Bareiss quotients.
    pub fn rank_fraction_free(&self) -> usize {
        let mut a = self.clone();
        let mut prev = T::one_elem();
        let mut rank = 0;
        for c in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&i| !a.get(i, c).is_zero_elem()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let pivot = a.get(rank, c).clone();
            for i in rank + 1..a.rows {
                let factor = a.get(i, c).clone();
                for j in c + 1..a.cols {
                    let v = pivot
                        .mul_ref(a.get(i, j))
                        .sub_ref(&factor.mul_ref(a.get(rank, j)))
                        .div_exact(&prev);
                    a.set(i, j, v);
                }
                a.set(i, c, T::zero_elem());
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Determinant by Bareiss elimination.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = T::one_elem();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero_elem()) else {
                return T::zero_elem();
            };
            if p != k {
                a.swap_rows(k, p);
                negate = !negate;
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let factor = a.get(i, k).clone();
                for j in k + 1..n {
                    let v = pivot
                        .mul_ref(a.get(i, j))
                        .sub_ref(&factor.mul_ref(a.get(k, j)))
                        .div_exact(&prev);
                    a.set(i, j, v);
                }
                a.set(i, k, T::zero_elem());
            }
            prev = pivot;
        }
        let det = if n == 0 { T::one_elem() } else { a.get(n - 1, n - 1).clone() };
        if negate {
            det.neg_ref()
        } else {
            det
        }
    }

    /// Inverse by fraction-free Gauss-Jordan elimination on `[A | I]`.
    ///
    /// After elimination the left block is `d * I` and the right block is
    /// `d * A^{-1}`; the final division needs a field. Returns `None` for a
    /// singular matrix.
    pub fn inverse_fraction_free(&self) -> Option<Matrix<T>> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let w = 2 * n;
        let mut a = Matrix::from_fn(n, w, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one_elem()
            } else {
                T::zero_elem()
            }
        });
        let mut prev = T::one_elem();
        for k in 0..n {
            let p = (k..n).find(|&i| !a.get(i, k).is_zero_elem())?;
            a.swap_rows(k, p);
            let pivot = a.get(k, k).clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = a.get(i, k).clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let lhs = pivot.mul_ref(a.get(i, j));
                    let v = if factor.is_zero_elem() {
                        lhs
                    } else {
                        lhs.sub_ref(&factor.mul_ref(a.get(k, j)))
                    };
                    a.set(i, j, v.div_exact(&prev));
                }
                a.set(i, k, T::zero_elem());
            }
            prev = pivot;
        }
        Some(Matrix::from_fn(n, n, |i, j| a.get(i, n + j).div_exact(a.get(i, i))))
    }
}

impl Matrix<Rational> {
    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(super::rat).collect())
                .collect(),
        )
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<Rational>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = Rational::one() / a.get(r, c);
            for j in c..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in c..a.cols {
                    if a.get(r, j).is_zero() {
                        continue;
                    }
                    let v = a.get(i, j) - &f * a.get(r, j);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix<Rational>> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    /// `det(x I - A)` by the Faddeev-LeVerrier recursion.
    pub fn charpoly(&self) -> UniPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::<Rational>::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            let c = coeffs[n - k + 1].clone();
            for i in 0..n {
                let v = next.get(i, i) + &c;
                next.set(i, i, v);
            }
            m = next;
            let t = self.mul(&m).trace();
            coeffs[n - k] = -t / Rational::from_integer((k as i64).into());
        }
        UniPoly::new(coeffs)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u32).is_zero()
    }

    /// `[rank A, rank A^2, ..., rank A^k]`
    pub fn power_ranks(&self, k: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(k);
        let mut p = self.clone();
        for _ in 0..k {
            out.push(p.rank());
            p = p.mul(self);
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_laurent, rat, ratfun_matrix_inverse, RatFun};

    fn rf(s: &str) -> RatFun {
        RatFun::from_laurent(parse_laurent(s).unwrap())
    }

    fn rfm(rows: &[&[&str]]) -> Matrix<RatFun> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| rf(s)).collect()).collect())
    }

    #[test]
    fn diagonal_inverse() {
        let m = rfm(&[&["r", "0", "0"], &["0", "r", "0"], &["0", "0", "1"]]);
        let inv = ratfun_matrix_inverse(&m).unwrap();
        assert_eq!(inv, rfm(&[&["r^-1", "0", "0"], &["0", "r^-1", "0"], &["0", "0", "1"]]));
    }

    #[test]
    fn equal_rows_are_singular() {
        let m = rfm(&[&["r", "1"], &["r", "1"]]);
        assert!(ratfun_matrix_inverse(&m).is_err());
    }

    #[test]
    fn inverse_with_rational_function_entries() {
        let m = rfm(&[&["1", "r"], &["r", "1"]]);
        let inv = ratfun_matrix_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.mul(&m), Matrix::identity(2));
        assert!(!inv.get(0, 0).is_laurent());
    }

    #[test]
    fn rational_rank_nullspace_charpoly() {
        let a = Matrix::from_i64(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rank_fraction_free(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
        // x^2 + 1 for the rotation generator
        let j = Matrix::from_i64(vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(j.charpoly(), UniPoly::new(vec![rat(1), rat(0), rat(1)]));
        assert_eq!(a.determinant(), rat(0));
        assert_eq!(j.determinant(), rat(1));
    }
}
