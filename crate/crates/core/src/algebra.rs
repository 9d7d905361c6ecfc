//! The truncated path algebra `Λ_L = KQ / <paths of length L>`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::linalg::{Field, Matrix};
use crate::modrep::Representation;
use crate::quiver::{Path, Quiver};
use crate::Error;

#[derive(Debug, Clone)]
pub struct TruncatedAlgebra<F: Field> {
    field: F,
    quiver: Arc<Quiver>,
    l: usize,
    basis: Vec<Path>,
}

impl<F: Field> TruncatedAlgebra<F> {
    pub fn new(field: F, quiver: Quiver, l: usize) -> Result<Self, Error> {
        Self::from_arc(field, Arc::new(quiver), l)
    }

    pub fn from_arc(field: F, quiver: Arc<Quiver>, l: usize) -> Result<Self, Error> {
        if l == 0 {
            return Err(Error::InvalidInput(
                "truncation length must be at least 1".into(),
            ));
        }
        let basis = quiver.enumerate_paths(l - 1);
        Ok(TruncatedAlgebra {
            field,
            quiver,
            l,
            basis,
        })
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

    /// Paths of length `< L`, by length then lexicographically.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Product `p q` (`p` after `q`) of two basis paths.
    pub fn multiply(&self, p: &Path, q: &Path) -> Option<Path> {
        let r = p.after(q, &self.quiver)?;
        (r.len() < self.l).then_some(r)
    }

    /// `min(L, 1 + longest path)`.
    pub fn loewy_length(&self) -> usize {
        match self.quiver.longest_path() {
            None => self.l,
            Some(m) => self.l.min(m + 1),
        }
    }

    /// `Λ_L e_i` with basis the paths starting at `i` (0-based).
    pub fn projective(&self, i: usize) -> Representation<F> {
        free_module(&self.field, &self.quiver, self.l, &[i]).0
    }

    /// The injective envelope of `S_i`: the dual of `e_i Λ_L`.
    ///
    /// The basis at vertex `v` is `p*` for the paths `p: v -> i` of length
    /// `< L`, and an arrow `a` sends `p*` to `p'*` when `p = p' a`.
    pub fn injective(&self, i: usize) -> Representation<F> {
        let q = &self.quiver;
        let f = &self.field;
        let n = q.num_vertices();
        let mut at: Vec<Vec<Path>> = vec![Vec::new(); n];
        for p in &self.basis {
            if p.end(q) == i {
                at[p.start].push(p.clone());
            }
        }
        let index: Vec<HashMap<Path, usize>> = at
            .iter()
            .map(|ps| {
                ps.iter()
                    .cloned()
                    .enumerate()
                    .map(|(k, p)| (p, k))
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = at.iter().map(|v| v.len()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                for (c, p) in at[a.source].iter().enumerate() {
                    if p.arrows.first() == Some(&k) {
                        let rest = Path {
                            start: a.target,
                            arrows: p.arrows[1..].to_vec(),
                        };
                        let r = index[a.target][&rest];
                        m.set(r, c, f.one());
                    }
                }
                m
            })
            .collect();
        Representation::from_parts(f.clone(), q.clone(), self.l, dims, maps)
    }

    pub fn simple(&self, i: usize) -> Representation<F> {
        Representation::simple(self.field.clone(), self.quiver.clone(), self.l, i)
    }

    /// `Λ_L` as a left module over itself.
    pub fn regular(&self) -> Representation<F> {
        let gens: Vec<usize> = (0..self.quiver.num_vertices()).collect();
        free_module(&self.field, &self.quiver, self.l, &gens).0
    }
}

/// Basis element `(generator, path)` of a free module: `path` applied to
/// the generator.
pub type FreeBasis = Vec<Vec<(usize, Path)>>;

/// `⊕_g Λ_L e_{v(g)}` for generators sitting at the vertices `gens`. Also
/// returns the basis, per vertex, as `(generator index, path)` pairs.
pub fn free_module<F: Field>(
    field: &F,
    quiver: &Arc<Quiver>,
    l: usize,
    gens: &[usize],
) -> (Representation<F>, FreeBasis) {
    let n = quiver.num_vertices();
    let paths = quiver.enumerate_paths(l.saturating_sub(1));
    let mut basis: FreeBasis = vec![Vec::new(); n];
    for (g, &v) in gens.iter().enumerate() {
        for p in paths.iter().filter(|p| p.start == v) {
            basis[p.end(quiver)].push((g, p.clone()));
        }
    }
    let index: Vec<HashMap<(usize, Path), usize>> = basis
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(k, x)| (x, k)).collect())
        .collect();
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for (c, (g, p)) in basis[a.source].iter().enumerate() {
                if p.len() + 1 < l {
                    let r = index[a.target][&(*g, p.then(k))];
                    m.set(r, c, field.one());
                }
            }
            m
        })
        .collect();
    (
        Representation::from_parts(field.clone(), quiver.clone(), l, dims, maps),
        basis,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};
    use crate::quiver::examples::*;

    fn alg(q: Quiver, l: usize) -> TruncatedAlgebra<Rationals> {
        TruncatedAlgebra::new(Rationals::default(), q, l).unwrap()
    }

    #[test]
    fn projective_dimension_vectors() {
        let a = alg(tilt_illustration(), 3);
        assert_eq!(a.projective(0).dims(), &[1, 2, 2, 1]);
        let u = alg(loops(1), 4).projective(0);
        assert_eq!(u.dims(), &[4]);
        assert_eq!(
            u.radical_layering().layers(),
            &[vec![1], vec![1], vec![1], vec![1]]
        );
        let sink = alg(tilt_illustration(), 3).projective(3);
        assert_eq!(sink.dims(), &[0, 0, 0, 1]);
    }

    #[test]
    fn projective_layering_counts_paths() {
        let a = alg(tilt_illustration(), 3);
        let q = a.quiver().clone();
        for i in 0..4 {
            let lay = a.projective(i).radical_layering();
            for (len, layer) in lay.layers().iter().enumerate() {
                for v in 0..4 {
                    let count = a
                        .basis()
                        .iter()
                        .filter(|p| p.start == i && p.len() == len && p.end(&q) == v)
                        .count();
                    assert_eq!(layer[v], count);
                }
            }
        }
    }

    #[test]
    fn injective_examples() {
        let a = alg(tilt_illustration(), 3);
        let e4 = a.injective(3);
        assert_eq!(e4.total_dim(), 4);
        for i in 0..4 {
            let soc = a.injective(i).socle_layering();
            let mut unit = [0; 4];
            unit[i] = 1;
            assert_eq!(soc.layer(0), &unit[..]);
        }
        let e = alg(loops(1), 3).injective(0);
        assert_eq!(e.dims(), &[3]);
        assert_eq!(e.socle_layering().layers(), &[vec![1], vec![1], vec![1]]);
    }

    #[test]
    fn loewy_lengths() {
        assert_eq!(alg(two_cycle(), 5).loewy_length(), 5);
        let a3 = Quiver::new(3, &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        assert_eq!(alg(a3, 5).loewy_length(), 3);
        assert_eq!(alg(Quiver::new(2, &[]).unwrap(), 4).loewy_length(), 1);
    }

    #[test]
    fn regular_module_is_sum_of_projectives() {
        let a = TruncatedAlgebra::new(PrimeField::new(7).unwrap(), alpha_beta_beta(), 3).unwrap();
        assert_eq!(a.regular().total_dim(), a.dim());
        let sum: usize = (0..2).map(|i| a.projective(i).total_dim()).sum();
        assert_eq!(sum, a.dim());
    }
}
