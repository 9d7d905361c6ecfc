use std::collections::HashMap;

use super::{Family, Representation};
use crate::algebra::{free_module, FreeBasis};
use crate::linalg::{Field, Matrix, Subspace};
use crate::quiver::Path;

/// `f: P(M) -> M` with `P(M) = ⊕_g Λ_L e_{v(g)}` over a basis `g` of the
/// top of `M`, and its kernel `K ⊆ J P(M)`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover<F: Field> {
    /// Top basis of `M`: `(vertex, index)` of a standard basis vector of
    /// `M_vertex` lying outside `JM`.
    pub generators: Vec<(usize, usize)>,
    pub projective: Representation<F>,
    /// Basis of `P(M)` per vertex as `(generator, path)`.
    pub basis: FreeBasis,
    /// Per vertex, the `dim M_v x dim P_v` matrix of `f`.
    pub map: Vec<Matrix<F::Elem>>,
    pub kernel: Family<F::Elem>,
}

impl<F: Field> Representation<F> {
    pub fn projective_cover(&self) -> ProjectiveCover<F> {
        let f = self.field();
        let q = self.quiver().clone();
        let rad = self.radical_of(&self.full_family());
        let mut generators = Vec::new();
        for (v, s) in rad.iter().enumerate() {
            for c in s.complement_indices() {
                generators.push((v, c));
            }
        }
        let gen_vertices: Vec<usize> = generators.iter().map(|&(v, _)| v).collect();
        let (projective, basis) = free_module(f, &q, self.l(), &gen_vertices);
        // image of each (generator, path), filled in path order so that the
        // image of a prefix is always available
        let mut images: HashMap<(usize, Path), Vec<F::Elem>> = HashMap::new();
        let mut all: Vec<&(usize, Path)> = basis.iter().flatten().collect();
        all.sort_by_key(|a| a.1.len());
        for (g, p) in all {
            let img = if p.is_lazy() {
                let (v, c) = generators[*g];
                let mut e = vec![f.zero(); self.dim(v)];
                e[c] = f.one();
                e
            } else {
                let mut prefix = p.clone();
                let last = prefix.arrows.pop().unwrap();
                self.act(last, &images[&(*g, prefix)])
            };
            images.insert((*g, p.clone()), img);
        }
        let map: Vec<Matrix<F::Elem>> = basis
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let cols: Vec<Vec<F::Elem>> = b.iter().map(|x| images[x].clone()).collect();
                Matrix::from_columns(self.dim(v), &cols)
            })
            .collect();
        let kernel = map.iter().map(|m| m.kernel(f)).collect();
        ProjectiveCover {
            generators,
            projective,
            basis,
            map,
            kernel,
        }
    }
}

impl<F: Field> ProjectiveCover<F> {
    /// `K = ker f` as a representation.
    pub fn kernel_module(&self) -> Representation<F> {
        self.projective
            .submodule(&self.kernel)
            .expect("kernel of a module map is a submodule")
            .0
    }

    /// A basis of `K` modulo `JK`, as vectors of `P(M)` per vertex. These
    /// generate `K` as a module.
    pub fn kernel_generators(&self) -> Vec<(usize, Vec<F::Elem>)> {
        let f = self.projective.field();
        let jk = self.projective.radical_of(&self.kernel);
        let mut out = Vec::new();
        for (v, (k, j)) in self.kernel.iter().zip(&jk).enumerate() {
            let mut acc = j.clone();
            for b in k.basis() {
                if !acc.contains(f, b) {
                    acc = acc.sum(f, &Subspace::span(f, b.len(), std::slice::from_ref(b)));
                    out.push((v, b.clone()));
                }
            }
        }
        out
    }

    /// Per vertex, the columns of `P_v` forming an invertible block of `f_v`
    /// and the inverse of that block.
    pub fn section(&self) -> Vec<(Vec<usize>, Matrix<F::Elem>)> {
        let f = self.projective.field();
        self.map
            .iter()
            .map(|m| {
                let (_, pivots) = m.rref(f);
                let block = m.select_columns(&pivots);
                let inv = block.inverse(f).expect("projective cover is onto");
                (pivots, inv)
            })
            .collect()
    }
}
