use rand::Rng;

use super::field::Field;
use super::subspace::Subspace;

/// Dense matrix in row-major order. Field operations are supplied by the
/// caller, the matrix only stores elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<E>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self
    where
        E: Default,
    {
        let mut m = Matrix::filled(rows, columns.len(), E::default());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Rows `[r0, r1)` and columns `[c0, c1)`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut data = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for r in r0..r1 {
            data.extend_from_slice(&self.data[r * self.cols + c0..r * self.cols + c1]);
        }
        Matrix {
            rows: r1 - r0,
            cols: c1 - c0,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Place `self` left of `other`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix {
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn map<F2, G: Fn(&E) -> F2>(&self, g: G) -> Matrix<F2> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(g).collect(),
        }
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(
        f: &F,
        rows: usize,
        cols: usize,
        rng: &mut R,
    ) -> Self {
        let data = (0..rows * cols).map(|_| f.random(rng)).collect();
        Matrix { rows, cols, data }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        self.map(|x| f.mul(x, s))
    }

    pub fn trace<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// nonzero row.
    pub fn rref_in_place<F: Field<Elem = E>>(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !f.is_zero(self.get(r, col))) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("nonzero pivot");
            if !f.is_one(&inv) {
                for c in col..self.cols {
                    let idx = row * self.cols + c;
                    if !f.is_zero(&self.data[idx]) {
                        self.data[idx] = f.mul(&self.data[idx], &inv);
                    }
                }
            }
            let pivot_row: Vec<(usize, E)> = (col..self.cols)
                .filter(|&c| !f.is_zero(self.get(row, c)))
                .map(|c| (c, self.get(row, c).clone()))
                .collect();
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (c, v) in &pivot_row {
                    let idx = r * self.cols + c;
                    self.data[idx] = f.sub(&self.data[idx], &f.mul(&factor, v));
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref<F: Field<Elem = E>>(&self, f: &F) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place(f);
        (m, p)
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.rref(f).1.len()
    }

    /// Canonical basis of `{v : self * v = 0}`.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Subspace<E> {
        let (r, pivots) = self.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            vectors.push(v);
        }
        Subspace::span(f, self.cols, &vectors)
    }

    /// Column space.
    pub fn image<F: Field<Elem = E>>(&self, f: &F) -> Subspace<E> {
        let cols: Vec<Vec<E>> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::span(f, self.rows, &cols)
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve<F: Field<Elem = E>>(&self, f: &F, b: &[E]) -> Option<Vec<E>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_vec(self.rows, 1, b.to_vec()));
        let (r, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Self::identity(f, n));
        let (r, pivots) = aug.rref(f);
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.submatrix(0, n, n, 2 * n))
    }

    pub fn is_nilpotent<F: Field<Elem = E>>(&self, f: &F) -> bool {
        assert_eq!(self.rows, self.cols);
        // Repeated squaring reaches power >= n.
        let mut m = self.clone();
        let mut power = 1;
        while power < self.rows {
            m = m.mul(f, &m);
            power *= 2;
        }
        m.is_zero(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rat, Rationals};

    fn q(rows: usize, cols: usize, v: &[i64]) -> Matrix<Rat> {
        Matrix::from_vec(rows, cols, v.iter().map(|&x| Rat::from_i64(x)).collect())
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let f = Rationals::default();
        let k = Matrix::zeros(&f, 2, 2).kernel(&f);
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let f = Rationals::default();
        assert_eq!(Matrix::identity(&f, 3).kernel(&f).dim(), 0);
    }

    #[test]
    fn kernel_over_f2() {
        let f = PrimeField::new(2).unwrap();
        let m = Matrix::from_vec(1, 2, vec![1u64, 1]);
        let k = m.kernel(&f);
        // oracle: all four vectors of F_2^2
        let brute: Vec<Vec<u64>> = (0..4u64)
            .map(|b| vec![b & 1, (b >> 1) & 1])
            .filter(|v| v.iter().any(|&x| x != 0))
            .filter(|v| (v[0] + v[1]) % 2 == 0)
            .collect();
        assert_eq!(brute, vec![vec![1, 1]]);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&f, &[1, 1]));
    }

    #[test]
    fn solve_and_inverse() {
        let f = Rationals::default();
        let a = q(2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&f, &inv), Matrix::identity(&f, 2));
        let x = a.solve(&f, &[Rat::from_i64(3), Rat::from_i64(2)]).unwrap();
        assert_eq!(x, vec![Rat::ONE, Rat::ONE]);
        assert!(q(2, 2, &[1, 1, 1, 1])
            .solve(&f, &[Rat::ONE, Rat::ZERO])
            .is_none());
    }

    #[test]
    fn nilpotent_detection() {
        let f = Rationals::default();
        assert!(q(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]).is_nilpotent(&f));
        assert!(!q(2, 2, &[0, 1, 1, 0]).is_nilpotent(&f));
    }
}
