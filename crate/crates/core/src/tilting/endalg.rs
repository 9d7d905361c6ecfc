use crate::linalg::{Field, Matrix, SpanBuilder, Subspace};
use crate::modrep::Representation;
use crate::quiver::Quiver;
use crate::Error;

/// `Hom(T_i, T_j)`. Elements are vectors of generator images: the images
/// of the top generators of `T_i`, concatenated. `maps[k]` is the full
/// per-vertex form of `space.basis()[k]`.
#[derive(Debug, Clone)]
pub struct HomBlock<E> {
    pub space: Subspace<E>,
    pub maps: Vec<Vec<Matrix<E>>>,
}

/// `End(⊕ T_i)` stored blockwise. The idempotent `ẽ_i` is the identity of
/// `T_i`; multiplication in `Λ̃ = End(T)^op` is composition read backwards.
#[derive(Debug, Clone)]
pub struct BasicAlgebra<F: Field> {
    field: F,
    modules: Vec<Representation<F>>,
    /// Top generators `(vertex, index)` of each `T_i`.
    generators: Vec<Vec<(usize, usize)>>,
    blocks: Vec<Vec<HomBlock<F::Elem>>>,
}

impl<F: Field> BasicAlgebra<F> {
    pub fn new(modules: Vec<Representation<F>>) -> Result<Self, Error> {
        let field = modules
            .first()
            .ok_or_else(|| Error::InvalidInput("no summands".into()))?
            .field()
            .clone();
        let covers: Vec<_> = modules.iter().map(|m| m.projective_cover()).collect();
        let blocks = covers
            .iter()
            .map(|c| {
                modules
                    .iter()
                    .map(|t| {
                        let h = c.hom_to(t);
                        let space =
                            Subspace::span(&field, gen_len(&c.generators, t), &h.generator_images);
                        debug_assert_eq!(space.basis(), &h.generator_images[..]);
                        HomBlock {
                            space,
                            maps: h.maps,
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(BasicAlgebra {
            field,
            generators: covers.into_iter().map(|c| c.generators).collect(),
            modules,
            blocks,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_idempotents(&self) -> usize {
        self.modules.len()
    }

    pub fn modules(&self) -> &[Representation<F>] {
        &self.modules
    }

    pub fn block(&self, i: usize, j: usize) -> &HomBlock<F::Elem> {
        &self.blocks[i][j]
    }

    /// `dim Hom(T_i, T_j)`.
    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        self.blocks[i][j].space.dim()
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().flatten().map(|b| b.space.dim()).sum()
    }

    /// Generator-image length of elements of `Hom(T_i, T_j)`.
    pub fn ambient(&self, i: usize, j: usize) -> usize {
        self.blocks[i][j].space.ambient_dim()
    }

    pub fn identity(&self, i: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = Vec::new();
        for &(v, c) in &self.generators[i] {
            let mut e = vec![f.zero(); self.modules[i].dim(v)];
            e[c] = f.one();
            out.extend(e);
        }
        out
    }

    /// Per-vertex matrices of `x ∈ Hom(T_i, T_j)`.
    pub fn full_map(&self, i: usize, j: usize, x: &[F::Elem]) -> Vec<Matrix<F::Elem>> {
        let f = &self.field;
        let b = &self.blocks[i][j];
        let c = b.space.coordinates(f, x).expect("element of the Hom space");
        let t = &self.modules[i];
        let u = &self.modules[j];
        let mut acc: Vec<Matrix<F::Elem>> = (0..t.dims().len())
            .map(|v| Matrix::zeros(f, u.dim(v), t.dim(v)))
            .collect();
        for (ck, mk) in c.iter().zip(&b.maps) {
            if f.is_zero(ck) {
                continue;
            }
            for (a, m) in acc.iter_mut().zip(mk) {
                *a = a.add(f, &m.scale(f, ck));
            }
        }
        acc
    }

    /// `g ∘ x` for `x ∈ Hom(T_i, T_j)` and `g: T_j -> T_k` given by its
    /// per-vertex matrices.
    pub fn apply(&self, i: usize, g: &[Matrix<F::Elem>], x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = Vec::new();
        let mut off = 0;
        for &(v, _) in &self.generators[i] {
            let len = g[v].cols();
            out.extend(g[v].mul_vec(f, &x[off..off + len]));
            off += len;
        }
        out
    }

    /// `y ∘ x` for `x ∈ Hom(T_i, T_j)`, `y ∈ Hom(T_j, T_k)`.
    pub fn compose(
        &self,
        i: usize,
        j: usize,
        k: usize,
        x: &[F::Elem],
        y: &[F::Elem],
    ) -> Vec<F::Elem> {
        let g = self.full_map(j, k, y);
        self.apply(i, &g, x)
    }

    /// `Σ_v tr x_v` for an endomorphism of `T_i`.
    pub fn trace(&self, i: usize, x: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        self.full_map(i, i, x)
            .iter()
            .fold(f.zero(), |acc, m| f.add(&acc, &m.trace(f)))
    }

    /// The radical `J` and its powers. Only over the rationals: the
    /// radical of each local corner `End(T_i)` is taken as the kernel of
    /// the trace, which needs characteristic zero.
    pub fn radical(&self) -> Result<RadicalChain<F::Elem>, Error> {
        let f = &self.field;
        if f.order().is_some() {
            return Err(Error::Unsupported(
                "radical computation needs characteristic zero".into(),
            ));
        }
        let n = self.num_idempotents();
        let mut j1: Vec<Vec<Subspace<F::Elem>>> = vec![Vec::with_capacity(n); n];
        for i in 0..n {
            for k in 0..n {
                let b = &self.blocks[i][k].space;
                let s = if i != k {
                    b.clone()
                } else {
                    let traces: Vec<F::Elem> = b.basis().iter().map(|x| self.trace(i, x)).collect();
                    let coeffs = Matrix::from_rows(traces.len(), &[traces]).kernel(f);
                    let vecs: Vec<Vec<F::Elem>> = coeffs
                        .basis()
                        .iter()
                        .map(|c| combine(f, c, b.basis(), b.ambient_dim()))
                        .collect();
                    Subspace::span(f, b.ambient_dim(), &vecs)
                };
                j1[i].push(s);
            }
        }
        let full_j: Vec<Vec<Vec<Vec<Matrix<F::Elem>>>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        j1[i][k]
                            .basis()
                            .iter()
                            .map(|x| self.full_map(i, k, x))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let j2 = self.product(&j1, &full_j, &j1);
        // arrow lifts: a complement of J² in J, blockwise
        let mut arrows: Vec<Vec<Vec<Vec<F::Elem>>>> = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let mut acc = j2[i][k].clone();
                for x in j1[i][k].basis() {
                    if !acc.contains(f, x) {
                        acc = acc.sum(f, &Subspace::span(f, x.len(), std::slice::from_ref(x)));
                        arrows[i][k].push(x.clone());
                    }
                }
            }
        }
        let full_a: Vec<Vec<Vec<Vec<Matrix<F::Elem>>>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        arrows[i][k]
                            .iter()
                            .map(|x| self.full_map(i, k, x))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut powers = vec![j1];
        let bound = self.dim() + 1;
        while !is_zero_power(powers.last().unwrap()) {
            if powers.len() > bound {
                return Err(Error::Verification("the radical is not nilpotent".into()));
            }
            let last = powers.last().unwrap();
            let next = self.product(last, &full_a, last);
            powers.push(next);
        }
        let loewy_length = powers.len();
        let vertex_loewy_lengths = (0..n)
            .map(|a| {
                1 + powers
                    .iter()
                    .take_while(|p| p[a].iter().any(|s| !s.is_zero()))
                    .count()
            })
            .collect();
        Ok(RadicalChain {
            powers,
            arrows,
            loewy_length,
            vertex_loewy_lengths,
        })
    }

    /// `Σ_j outer_jk ∘ inner_ij`, blockwise; `outer` is given by full maps.
    /// The result lies in `within`, so a block stops growing once it has
    /// the dimension of the matching block there.
    fn product(
        &self,
        inner: &[Vec<Subspace<F::Elem>>],
        outer: &[Vec<Vec<Vec<Matrix<F::Elem>>>>],
        within: &[Vec<Subspace<F::Elem>>],
    ) -> Vec<Vec<Subspace<F::Elem>>> {
        let f = &self.field;
        let n = self.num_idempotents();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        let cap = within[i][k].dim();
                        let mut span = SpanBuilder::new(self.ambient(i, k));
                        'fill: for j in 0..n {
                            for x in inner[i][j].basis() {
                                for g in &outer[j][k] {
                                    if span.dim() == cap {
                                        break 'fill;
                                    }
                                    span.push(f, &self.apply(i, g, x));
                                }
                            }
                        }
                        span.finish(f)
                    })
                    .collect()
            })
            .collect()
    }
}

fn gen_len<F: Field>(gens: &[(usize, usize)], t: &Representation<F>) -> usize {
    gens.iter().map(|&(v, _)| t.dim(v)).sum()
}

fn combine<F: Field>(f: &F, c: &[F::Elem], vecs: &[Vec<F::Elem>], len: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); len];
    for (ck, v) in c.iter().zip(vecs) {
        if f.is_zero(ck) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = f.add(o, &f.mul(ck, x));
        }
    }
    out
}

fn is_zero_power<E: Clone + PartialEq>(p: &[Vec<Subspace<E>>]) -> bool {
    p.iter().flatten().all(|s| s.is_zero())
}

/// `J ⊇ J² ⊇ ... ⊇ J^m = 0` blockwise, with `powers[k - 1][i][j] = J^k ∩
/// Hom(T_i, T_j)`.
#[derive(Debug, Clone)]
pub struct RadicalChain<E> {
    pub powers: Vec<Vec<Vec<Subspace<E>>>>,
    /// `arrows[i][j]`: maps `T_i -> T_j` spanning `J` modulo `J²`.
    pub arrows: Vec<Vec<Vec<Vec<E>>>>,
    pub loewy_length: usize,
    /// Per `a`, the least `k` with every map out of `T_a` in `J^k` zero.
    pub vertex_loewy_lengths: Vec<usize>,
}

impl<E: Clone + PartialEq> RadicalChain<E> {
    /// `dim` of the irreducible maps `T_i -> T_j`.
    pub fn arrow_multiplicity(&self, i: usize, j: usize) -> usize {
        self.arrows[i][j].len()
    }

    /// The quiver of `Λ̃`: one arrow `ẽ_i -> ẽ_j` per irreducible map
    /// `T_i -> T_j`, in the order of `arrows`.
    pub fn quiver(&self) -> Quiver {
        let n = self.arrows.len();
        let mut ids = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..self.arrows[i][j].len() {
                    ids.push((format!("x{}_{}_{}", i + 1, j + 1, k + 1), i + 1, j + 1));
                }
            }
        }
        let refs: Vec<(&str, usize, usize)> =
            ids.iter().map(|(s, a, b)| (s.as_str(), *a, *b)).collect();
        Quiver::new(n, &refs).expect("tilt quiver is well formed")
    }

    /// Arrow lifts as `(source, target, element)` in the arrow order of
    /// [`RadicalChain::quiver`].
    pub fn arrow_lifts(&self) -> Vec<(usize, usize, &Vec<E>)> {
        let n = self.arrows.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for x in &self.arrows[i][j] {
                    out.push((i, j, x));
                }
            }
        }
        out
    }
}
