//! Finite dimensional `Λ_L`-modules given by arrow matrices.

mod cover;
mod ext;
mod graph;
mod hom;
mod indecomposable;
mod json;

pub use cover::ProjectiveCover;
pub use ext::ext_dimension;
pub use graph::{GraphEdge, GraphNode, LayeredGraph};
pub use hom::{hom_dimension, hom_space, hom_space_intertwiner, is_homomorphism, HomBasis};
pub use indecomposable::{are_isomorphic, is_indecomposable, is_local_algebra};
pub use json::RepresentationJson;

use std::sync::Arc;

use crate::linalg::{Field, Matrix, Subspace};
use crate::quiver::{Path, Quiver};
use crate::ssq::SemisimpleSequence;
use crate::Error;

/// One subspace per vertex.
pub type Family<E> = Vec<Subspace<E>>;

/// A representation of `Q` annihilated by all paths of length `L`, i.e. a
/// point of `rep_d(Λ_L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<F: Field> {
    field: F,
    quiver: Arc<Quiver>,
    l: usize,
    dims: Vec<usize>,
    /// For each arrow `a: i -> j` a `d_j x d_i` matrix.
    maps: Vec<Matrix<F::Elem>>,
}

impl<F: Field> Representation<F> {
    pub fn new(
        field: F,
        quiver: Arc<Quiver>,
        l: usize,
        dims: Vec<usize>,
        maps: Vec<Matrix<F::Elem>>,
    ) -> Result<Self, Error> {
        if l == 0 {
            return Err(Error::InvalidInput(
                "truncation length must be at least 1".into(),
            ));
        }
        if dims.len() != quiver.num_vertices() {
            return Err(Error::InvalidInput(format!(
                "dimension vector has {} entries, quiver has {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::InvalidInput(format!(
                "expected {} arrow matrices, got {}",
                quiver.arrows().len(),
                maps.len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if (m.rows(), m.cols()) != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidInput(format!(
                    "matrix for arrow {} is {}x{}, expected {}x{}",
                    a.id,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let r = Representation {
            field,
            quiver,
            l,
            dims,
            maps,
        };
        if !r.radical_power(l).iter().all(|s| s.is_zero()) {
            return Err(Error::InvalidInput(format!(
                "some path of length {l} acts nonzero"
            )));
        }
        Ok(r)
    }

    /// Skips the nilpotency check; callers guarantee it by construction.
    pub(crate) fn from_parts(
        field: F,
        quiver: Arc<Quiver>,
        l: usize,
        dims: Vec<usize>,
        maps: Vec<Matrix<F::Elem>>,
    ) -> Self {
        debug_assert_eq!(maps.len(), quiver.arrows().len());
        Representation {
            field,
            quiver,
            l,
            dims,
            maps,
        }
    }

    pub fn zero(field: F, quiver: Arc<Quiver>, l: usize) -> Self {
        Self::semisimple(field, quiver, l, &[])
    }

    /// Direct sum of simples with multiplicities `d` (missing entries are 0).
    pub fn semisimple(field: F, quiver: Arc<Quiver>, l: usize, d: &[usize]) -> Self {
        let dims: Vec<usize> = (0..quiver.num_vertices())
            .map(|i| d.get(i).copied().unwrap_or(0))
            .collect();
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(&field, dims[a.target], dims[a.source]))
            .collect();
        Self::from_parts(field, quiver, l, dims, maps)
    }

    /// The simple module at vertex `i` (0-based).
    pub fn simple(field: F, quiver: Arc<Quiver>, l: usize, i: usize) -> Self {
        let mut d = vec![0; quiver.num_vertices()];
        d[i] = 1;
        Self::semisimple(field, quiver, l, &d)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, a: usize) -> &Matrix<F::Elem> {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix<F::Elem>] {
        &self.maps
    }

    /// Offsets of the vertex blocks in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len() + 1);
        let mut acc = 0;
        off.push(0);
        for &d in &self.dims {
            acc += d;
            off.push(acc);
        }
        off
    }

    /// The same matrices viewed as a module over `Λ_{l}`.
    pub fn with_l(&self, l: usize) -> Result<Self, Error> {
        if l >= self.l {
            let mut r = self.clone();
            r.l = l;
            return Ok(r);
        }
        Self::new(
            self.field.clone(),
            self.quiver.clone(),
            l,
            self.dims.clone(),
            self.maps.clone(),
        )
    }

    /// Matrix by which a path acts (`d_end x d_start`).
    pub fn path_action(&self, p: &Path) -> Matrix<F::Elem> {
        let f = &self.field;
        let mut m = Matrix::identity(f, self.dims[p.start]);
        for &a in &p.arrows {
            m = self.maps[a].mul(f, &m);
        }
        m
    }

    pub fn act(&self, a: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        self.maps[a].mul_vec(&self.field, v)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver);
        let f = &self.field;
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (s, t) = (a.source, a.target);
                let top = self.maps[k].hstack(&Matrix::zeros(f, self.dims[t], other.dims[s]));
                let bottom = Matrix::zeros(f, other.dims[t], self.dims[s]).hstack(&other.maps[k]);
                top.vstack(&bottom)
            })
            .collect();
        Self::from_parts(
            f.clone(),
            self.quiver.clone(),
            self.l.max(other.l),
            dims,
            maps,
        )
    }

    pub fn full_family(&self) -> Family<F::Elem> {
        self.dims
            .iter()
            .map(|&d| Subspace::full(&self.field, d))
            .collect()
    }

    pub fn zero_family(&self) -> Family<F::Elem> {
        self.dims.iter().map(|&d| Subspace::zero(d)).collect()
    }

    /// `J·U`: the span of all arrow images of `U`.
    pub fn radical_of(&self, u: &Family<F::Elem>) -> Family<F::Elem> {
        let f = &self.field;
        let mut vecs: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); self.dims.len()];
        for (k, a) in self.quiver.arrows().iter().enumerate() {
            for v in u[a.source].basis() {
                vecs[a.target].push(self.maps[k].mul_vec(f, v));
            }
        }
        vecs.iter()
            .enumerate()
            .map(|(v, vs)| Subspace::span(f, self.dims[v], vs))
            .collect()
    }

    /// True when every arrow maps `U` into `U`.
    pub fn is_stable(&self, u: &Family<F::Elem>) -> bool {
        let f = &self.field;
        self.quiver.arrows().iter().enumerate().all(|(k, a)| {
            u[a.source]
                .basis()
                .iter()
                .all(|v| u[a.target].contains(f, &self.maps[k].mul_vec(f, v)))
        })
    }

    /// Smallest submodule containing the given family.
    pub fn generated_submodule(&self, u: &Family<F::Elem>) -> Family<F::Elem> {
        let f = &self.field;
        let mut acc = u.clone();
        let mut frontier = u.clone();
        loop {
            let next = self.radical_of(&frontier);
            let mut grew = false;
            let mut new_frontier = Vec::with_capacity(acc.len());
            for (v, s) in next.into_iter().enumerate() {
                let sum = acc[v].sum(f, &s);
                if sum.dim() > acc[v].dim() {
                    grew = true;
                }
                acc[v] = sum;
                new_frontier.push(s);
            }
            if !grew {
                return acc;
            }
            frontier = new_frontier;
        }
    }

    /// `J^k M`.
    pub fn radical_power(&self, k: usize) -> Family<F::Elem> {
        let mut u = self.full_family();
        for _ in 0..k {
            if u.iter().all(|s| s.is_zero()) {
                break;
            }
            u = self.radical_of(&u);
        }
        u
    }

    /// `M = J^0 M ⊇ J M ⊇ ... ⊇ J^L M`.
    pub fn radical_series(&self) -> Vec<Family<F::Elem>> {
        let mut out = vec![self.full_family()];
        for _ in 0..self.l {
            let next = self.radical_of(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn radical_layering(&self) -> SemisimpleSequence {
        let series = self.radical_series();
        SemisimpleSequence::new(
            series
                .windows(2)
                .map(|w| {
                    w[0].iter()
                        .zip(&w[1])
                        .map(|(a, b)| a.dim() - b.dim())
                        .collect()
                })
                .collect(),
        )
    }

    /// Dimension vector of the top `M / JM`.
    pub fn top_dims(&self) -> Vec<usize> {
        let j = self.radical_of(&self.full_family());
        self.dims.iter().zip(&j).map(|(d, s)| d - s.dim()).collect()
    }

    /// Given a submodule `U`, the submodule `{m : J m ⊆ U}`.
    fn socle_step(&self, u: &Family<F::Elem>) -> Family<F::Elem> {
        let f = &self.field;
        (0..self.dims.len())
            .map(|v| {
                let mut rows: Vec<Vec<F::Elem>> = Vec::new();
                for a in self.quiver.arrows_from(v) {
                    let t = self.quiver.arrow(a).target;
                    let comp = u[t].complement_indices();
                    // rows of (projection onto quotient) * map
                    let m = &self.maps[a];
                    let images: Vec<Vec<F::Elem>> = (0..m.cols())
                        .map(|c| u[t].quotient_coords(f, &m.column(c)))
                        .collect();
                    for r in 0..comp.len() {
                        rows.push(images.iter().map(|col| col[r].clone()).collect());
                    }
                }
                if rows.is_empty() {
                    return Subspace::full(f, self.dims[v]);
                }
                Matrix::from_rows(self.dims[v], &rows).kernel(f)
            })
            .collect()
    }

    /// `0 = soc_0 ⊆ soc_1 ⊆ ... ⊆ soc_L = M`.
    pub fn socle_series(&self) -> Vec<Family<F::Elem>> {
        let mut out = vec![self.zero_family()];
        for _ in 0..self.l {
            let next = self.socle_step(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn socle_layering(&self) -> SemisimpleSequence {
        let series = self.socle_series();
        SemisimpleSequence::new(
            series
                .windows(2)
                .map(|w| {
                    w[1].iter()
                        .zip(&w[0])
                        .map(|(a, b)| a.dim() - b.dim())
                        .collect()
                })
                .collect(),
        )
    }

    /// `(radical layering, socle layering)`.
    pub fn theta(&self) -> (SemisimpleSequence, SemisimpleSequence) {
        (self.radical_layering(), self.socle_layering())
    }

    /// Submodule on an arrow-stable family, with the inclusion matrices.
    pub fn submodule(&self, u: &Family<F::Elem>) -> Result<(Self, Vec<Matrix<F::Elem>>), Error> {
        if !self.is_stable(u) {
            return Err(Error::InvalidInput(
                "subspace family is not a submodule".into(),
            ));
        }
        let f = &self.field;
        let dims: Vec<usize> = u.iter().map(|s| s.dim()).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let cols: Vec<Vec<F::Elem>> = u[a.source]
                    .basis()
                    .iter()
                    .map(|v| {
                        u[a.target]
                            .coordinates(f, &self.maps[k].mul_vec(f, v))
                            .expect("stable family")
                    })
                    .collect();
                Matrix::from_columns(dims[a.target], &cols)
            })
            .collect();
        let incl = u.iter().map(|s| s.basis_matrix()).collect();
        Ok((
            Self::from_parts(f.clone(), self.quiver.clone(), self.l, dims, maps),
            incl,
        ))
    }

    /// Quotient by an arrow-stable family, with the projection matrices.
    pub fn quotient(&self, u: &Family<F::Elem>) -> Result<(Self, Vec<Matrix<F::Elem>>), Error> {
        if !self.is_stable(u) {
            return Err(Error::InvalidInput(
                "subspace family is not a submodule".into(),
            ));
        }
        let f = &self.field;
        let proj: Vec<Matrix<F::Elem>> = u
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let cols: Vec<Vec<F::Elem>> = (0..self.dims[v])
                    .map(|c| {
                        let mut e = vec![f.zero(); self.dims[v]];
                        e[c] = f.one();
                        s.quotient_coords(f, &e)
                    })
                    .collect();
                Matrix::from_columns(self.dims[v] - s.dim(), &cols)
            })
            .collect();
        let dims: Vec<usize> = proj.iter().map(|p| p.rows()).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let comp = u[a.source].complement_indices();
                let cols: Vec<Vec<F::Elem>> = comp
                    .iter()
                    .map(|&c| proj[a.target].mul_vec(f, &self.maps[k].column(c)))
                    .collect();
                Matrix::from_columns(dims[a.target], &cols)
            })
            .collect();
        Ok((
            Self::from_parts(f.clone(), self.quiver.clone(), self.l, dims, maps),
            proj,
        ))
    }

    /// The vector space dual, a representation of the opposite quiver.
    pub fn dual(&self) -> Self {
        Self::from_parts(
            self.field.clone(),
            Arc::new(self.quiver.opposite()),
            self.l,
            self.dims.clone(),
            self.maps.iter().map(|m| m.transpose()).collect(),
        )
    }

    /// The same matrices read in another field, entry by entry through the
    /// exact string form. Over a prime field this is reduction mod `p`.
    pub fn convert<G: Field>(&self, g: G) -> Result<Representation<G>, Error> {
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let data = m
                    .entries()
                    .iter()
                    .map(|x| g.parse(&x.to_string()))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Matrix::from_vec(m.rows(), m.cols(), data))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        // products of reduced matrices are reduced products, so nilpotency
        // survives
        Ok(Representation::from_parts(
            g,
            self.quiver.clone(),
            self.l,
            self.dims.clone(),
            maps,
        ))
    }

    /// Change of basis: `g_v` is an invertible `d_v x d_v` matrix whose
    /// columns are the new basis vectors.
    pub fn change_basis(&self, g: &[Matrix<F::Elem>]) -> Result<Self, Error> {
        let f = &self.field;
        let inv: Vec<Matrix<F::Elem>> = g
            .iter()
            .map(|m| {
                m.inverse(f)
                    .ok_or_else(|| Error::InvalidInput("basis change is not invertible".into()))
            })
            .collect::<Result<_, _>>()?;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| inv[a.target].mul(f, &self.maps[k].mul(f, &g[a.source])))
            .collect();
        Ok(Self::from_parts(
            f.clone(),
            self.quiver.clone(),
            self.l,
            self.dims.clone(),
            maps,
        ))
    }
}
