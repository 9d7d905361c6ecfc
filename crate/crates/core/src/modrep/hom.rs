use std::collections::HashMap;

use super::{ProjectiveCover, Representation};
use crate::linalg::{Field, Matrix};
use crate::quiver::Path;

/// A basis of `Hom(M, N)`. Each element is stored twice: as the images of
/// the top generators of `M` (concatenated), and as per-vertex matrices.
#[derive(Debug, Clone)]
pub struct HomBasis<E> {
    pub generator_images: Vec<Vec<E>>,
    pub maps: Vec<Vec<Matrix<E>>>,
}

impl<E> HomBasis<E> {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

/// Memoized path actions on a fixed module.
pub(crate) struct PathActions<'a, F: Field> {
    module: &'a Representation<F>,
    cache: HashMap<Path, Matrix<F::Elem>>,
}

impl<'a, F: Field> PathActions<'a, F> {
    pub(crate) fn new(module: &'a Representation<F>) -> Self {
        PathActions {
            module,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, p: &Path) -> Matrix<F::Elem> {
        if let Some(m) = self.cache.get(p) {
            return m.clone();
        }
        let f = self.module.field();
        let m = if p.is_lazy() {
            Matrix::identity(f, self.module.dim(p.start))
        } else {
            let mut prefix = p.clone();
            let last = prefix.arrows.pop().unwrap();
            let inner = self.get(&prefix);
            self.module.map(last).mul(f, &inner)
        };
        self.cache.insert(p.clone(), m.clone());
        m
    }
}

impl<F: Field> ProjectiveCover<F> {
    /// `Hom(M, N)` for the module `M` covered by `self`: a map is fixed by
    /// the images of the generators, subject to the kernel generators
    /// mapping to zero.
    pub fn hom_to(&self, n: &Representation<F>) -> HomBasis<F::Elem> {
        let f = n.field();
        let gen_offsets: Vec<usize> = self
            .generators
            .iter()
            .scan(0, |acc, &(v, _)| {
                let o = *acc;
                *acc += n.dim(v);
                Some(o)
            })
            .collect();
        let unknowns: usize = self.generators.iter().map(|&(v, _)| n.dim(v)).sum();
        let mut actions = PathActions::new(n);
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for (w, r) in self.kernel_generators() {
            let mut block = vec![vec![f.zero(); unknowns]; n.dim(w)];
            for (k, c) in r.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let (g, p) = &self.basis[w][k];
                let np = actions.get(p);
                let off = gen_offsets[*g];
                for (i, row) in block.iter_mut().enumerate() {
                    for j in 0..np.cols() {
                        let x = np.get(i, j);
                        if !f.is_zero(x) {
                            row[off + j] = f.add(&row[off + j], &f.mul(c, x));
                        }
                    }
                }
            }
            rows.extend(block);
        }
        let solutions = if rows.is_empty() {
            crate::linalg::Subspace::full(f, unknowns)
        } else {
            Matrix::from_rows(unknowns, &rows).kernel(f)
        };
        let section = self.section();
        let mut maps = Vec::with_capacity(solutions.dim());
        for x in solutions.basis() {
            let per_vertex: Vec<Matrix<F::Elem>> = section
                .iter()
                .enumerate()
                .map(|(w, (pivots, inv))| {
                    // images of the chosen basis vectors of P_w, then undo
                    // the block of f
                    let cols: Vec<Vec<F::Elem>> = pivots
                        .iter()
                        .map(|&k| {
                            let (g, p) = &self.basis[w][k];
                            let off = gen_offsets[*g];
                            let xg = &x[off..off + n.dim(self.generators[*g].0)];
                            actions.get(p).mul_vec(f, xg)
                        })
                        .collect();
                    Matrix::from_columns(n.dim(w), &cols).mul(f, inv)
                })
                .collect();
            maps.push(per_vertex);
        }
        HomBasis {
            generator_images: solutions.basis().to_vec(),
            maps,
        }
    }
}

/// Basis of `Hom(M, N)` as families of per-vertex matrices.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> HomBasis<F::Elem> {
    m.projective_cover().hom_to(n)
}

pub fn hom_dimension<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_space(m, n).dim()
}

/// Basis of `Hom(M, N)` by solving `f_j M(a) = N(a) f_i` for all arrows
/// `a: i -> j` directly.
pub fn hom_space_intertwiner<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
) -> Vec<Vec<Matrix<F::Elem>>> {
    let f = m.field();
    let q = m.quiver();
    let nv = q.num_vertices();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += n.dim(v) * m.dim(v);
    }
    // unknown (v, r, c) is entry (r, c) of f_v
    let idx = |v: usize, r: usize, c: usize| offsets[v] + r * m.dim(v) + c;
    let mut rows = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (ma, na) = (m.map(k), n.map(k));
        for r in 0..n.dim(j) {
            for c in 0..m.dim(i) {
                let mut row = vec![f.zero(); total];
                for t in 0..m.dim(j) {
                    let x = ma.get(t, c);
                    if !f.is_zero(x) {
                        let u = idx(j, r, t);
                        row[u] = f.add(&row[u], x);
                    }
                }
                for t in 0..n.dim(i) {
                    let x = na.get(r, t);
                    if !f.is_zero(x) {
                        let u = idx(i, t, c);
                        row[u] = f.sub(&row[u], x);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sol = if rows.is_empty() {
        crate::linalg::Subspace::full(f, total)
    } else {
        Matrix::from_rows(total, &rows).kernel(f)
    };
    sol.basis()
        .iter()
        .map(|x| {
            (0..nv)
                .map(|v| {
                    Matrix::from_vec(
                        n.dim(v),
                        m.dim(v),
                        x[offsets[v]..offsets[v] + n.dim(v) * m.dim(v)].to_vec(),
                    )
                })
                .collect()
        })
        .collect()
}

/// True when the per-vertex matrices commute with every arrow.
pub fn is_homomorphism<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
    h: &[Matrix<F::Elem>],
) -> bool {
    let f = m.field();
    m.quiver()
        .arrows()
        .iter()
        .enumerate()
        .all(|(k, a)| h[a.target].mul(f, m.map(k)) == n.map(k).mul(f, &h[a.source]))
}
