use super::field::{Field, PrimeField};
use super::matrix::Matrix;
use crate::Error;

/// A subspace of `K^n` in canonical form.
///
/// The basis vectors are the rows of a reduced row echelon matrix, which is
/// the transpose of the reduced column echelon basis matrix. Equal subspaces
/// therefore compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    vectors: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        let vectors = (0..ambient)
            .map(|i| {
                let mut v = vec![f.zero(); ambient];
                v[i] = f.one();
                v
            })
            .collect();
        Subspace {
            ambient,
            vectors,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: &[Vec<E>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let mut m = Matrix::from_rows(ambient, vectors);
        let pivots = m.rref_in_place(f);
        let vectors = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace {
            ambient,
            vectors,
            pivots,
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate<F: Field<Elem = E>>(f: &F, ambient: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<E>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![f.zero(); ambient];
                v[i] = f.one();
                v
            })
            .collect();
        Self::span(f, ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.vectors.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<E>
    where
        E: Default,
    {
        Matrix::from_columns(self.ambient, &self.vectors)
    }

    /// Remainder of `v` after clearing the pivot coordinates.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut w = v.to_vec();
        for (row, &p) in self.vectors.iter().zip(&self.pivots) {
            if f.is_zero(&w[p]) {
                continue;
            }
            let c = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        w
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }

    pub fn contains_subspace<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        other.vectors.iter().all(|v| self.contains(f, v))
    }

    /// Coordinates of a member `v` in the canonical basis.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        let coords: Vec<E> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.contains(f, v) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        Self::span(f, self.ambient, &all)
    }

    pub fn intersection<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self
    where
        E: Default,
    {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // x in both iff x = A s = B t, so solve [A | -B] (s, t) = 0.
        let a = self.basis_matrix();
        let b = other.basis_matrix().scale(f, &f.neg(&f.one()));
        let k = a.hstack(&b).kernel(f);
        let vecs: Vec<Vec<E>> = k
            .basis()
            .iter()
            .map(|st| a.mul_vec(f, &st[..self.dim()]))
            .collect();
        Self::span(f, self.ambient, &vecs)
    }

    /// Indices of the standard basis vectors spanning the canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    pub fn complement<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Self::coordinate(f, self.ambient, &self.complement_indices())
    }

    /// Coordinates of the class of `v` in `K^n / self`, taken against the
    /// canonical complement.
    pub fn quotient_coords<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let w = self.reduce(f, v);
        self.complement_indices()
            .into_iter()
            .map(|i| w[i].clone())
            .collect()
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under<F: Field<Elem = E>>(&self, f: &F, m: &Matrix<E>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        let vecs: Vec<Vec<E>> = self.vectors.iter().map(|v| m.mul_vec(f, v)).collect();
        Self::span(f, m.rows(), &vecs)
    }
}

/// Span built one vector at a time. Each new vector is reduced against
/// the rows kept so far and stored only if it is independent of them.
#[derive(Debug, Clone)]
pub struct SpanBuilder<E> {
    ambient: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> SpanBuilder<E> {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn push<F: Field<Elem = E>>(&mut self, f: &F, v: &[E]) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&w[p]) {
                continue;
            }
            let c = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn finish<F: Field<Elem = E>>(self, f: &F) -> Subspace<E> {
        Subspace::span(f, self.ambient, &self.rows)
    }
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All `k`-dimensional subspaces of `F_p^n`, each once, in canonical order.
///
/// Subspaces are grouped by pivot set (lexicographic), and within a group the
/// free entries run through `F_p` like an odometer.
pub fn enumerate_subspaces(f: &PrimeField, n: usize, k: usize) -> Result<SubspaceIter, Error> {
    if k > n {
        return Err(Error::InvalidInput(format!(
            "subspace dimension {k} exceeds ambient dimension {n}"
        )));
    }
    let mut it = SubspaceIter {
        field: f.clone(),
        n,
        pivots: (0..k).collect(),
        free: Vec::new(),
        values: Vec::new(),
        done: false,
    };
    it.reset_free();
    Ok(it)
}

/// Same as [`enumerate_subspaces`] but accepts any [`FieldSpec`](super::FieldSpec)
/// and rejects the rationals.
pub fn enumerate_subspaces_spec(
    spec: super::FieldSpec,
    n: usize,
    k: usize,
) -> Result<SubspaceIter, Error> {
    match spec {
        super::FieldSpec::Rationals => Err(Error::InvalidInput(
            "subspaces can only be enumerated over a prime field".into(),
        )),
        super::FieldSpec::Prime { p } => enumerate_subspaces(&PrimeField::new(p)?, n, k),
    }
}

pub struct SubspaceIter {
    field: PrimeField,
    n: usize,
    pivots: Vec<usize>,
    /// (row, column) positions of the free entries for the current pivots.
    free: Vec<(usize, usize)>,
    values: Vec<u64>,
    done: bool,
}

impl SubspaceIter {
    fn reset_free(&mut self) {
        self.free.clear();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.values = vec![0; self.free.len()];
    }

    fn next_pivots(&mut self) -> bool {
        let k = self.pivots.len();
        let n = self.n;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> Subspace<u64> {
        let mut vectors = vec![vec![0u64; self.n]; self.pivots.len()];
        for (r, &p) in self.pivots.iter().enumerate() {
            vectors[r][p] = 1;
        }
        for (&(r, c), &v) in self.free.iter().zip(&self.values) {
            vectors[r][c] = v;
        }
        Subspace {
            ambient: self.n,
            vectors,
            pivots: self.pivots.clone(),
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace<u64>;

    fn next(&mut self) -> Option<Subspace<u64>> {
        if self.done {
            return None;
        }
        let out = self.current();
        let p = self.field.modulus();
        // advance the odometer, then the pivot set
        let mut carried = true;
        for v in self.values.iter_mut().rev() {
            *v += 1;
            if *v < p {
                carried = false;
                break;
            }
            *v = 0;
        }
        if carried {
            if self.next_pivots() {
                self.reset_free();
            } else {
                self.done = true;
            }
        }
        Some(out)
    }
}
