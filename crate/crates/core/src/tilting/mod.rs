//! The basic strong tilting module `T` of `Λ_L`, the tilted algebra
//! `Λ̃_L = End(T)^op`, its quiver and relations, and Loewy length ratios.

mod endalg;
mod presentation;
mod ratio;
mod report;
#[cfg(test)]
mod tests;

pub use endalg::{BasicAlgebra, HomBlock, RadicalChain};
pub use presentation::{tilt_presentation, Presentation, Relation, PATH_CAP};
pub use ratio::{
    accumulation_estimate, loewy_ratio_sequence, tilted_loewy_length, Accumulation, RatioEntry,
};
pub use report::{tilt_report, SummandReport, TiltReport};

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::TruncatedAlgebra;
use crate::linalg::{Field, Matrix};
use crate::modrep::{are_isomorphic, ext_dimension, is_indecomposable, Representation};
use crate::quiver::Quiver;
use crate::Error;

/// `ε`: the sum of the idempotents at non-precyclic vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Idempotent {
    pub vertices: BTreeSet<usize>,
}

impl Idempotent {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.is_empty()
    }
}

pub fn epsilon(q: &Quiver) -> Idempotent {
    let pre = q.precyclic();
    Idempotent {
        vertices: (0..q.num_vertices()).filter(|&v| !pre[v]).collect(),
    }
}

/// The minimal right `P^{<∞}`-approximation `P(R)/εKer f -> R`, where
/// `f: P(R) -> R` is the projective cover. Returns the module and the
/// per-vertex matrices of the induced map.
pub fn pinf_approximation<F: Field>(
    r: &Representation<F>,
) -> Result<(Representation<F>, Vec<Matrix<F::Elem>>), Error> {
    let eps = epsilon(r.quiver());
    let cover = r.projective_cover();
    let ek: Vec<_> = cover
        .kernel
        .iter()
        .enumerate()
        .map(|(v, k)| {
            if eps.contains(v) {
                k.clone()
            } else {
                crate::linalg::Subspace::zero(k.ambient_dim())
            }
        })
        .collect();
    // successors of non-precyclic vertices are non-precyclic
    if !cover.projective.is_stable(&ek) {
        return Err(Error::Verification("εKer f is not a submodule".into()));
    }
    let (a, _) = cover.projective.quotient(&ek)?;
    let induced = cover
        .map
        .iter()
        .zip(&ek)
        .map(|(m, s)| m.select_columns(&s.complement_indices()))
        .collect();
    Ok((a, induced))
}

/// The summands `T_1, ..., T_n` together with what was checked about them.
#[derive(Debug, Clone)]
pub struct TiltingModule<F: Field> {
    pub epsilon: Idempotent,
    pub summands: Vec<Representation<F>>,
    pub projective_dimension: usize,
}

/// Builds `T` from `Q` and `L`: `T_i = Λ_L e_i / εJ e_i` at precyclic
/// vertices, the approximation of the injective envelope `E_i` otherwise.
/// Any failed check is an `Error::Verification`.
pub fn strong_tilting_module<F: Field>(
    field: F,
    q: Arc<Quiver>,
    l: usize,
) -> Result<TiltingModule<F>, Error> {
    let alg = TruncatedAlgebra::from_arc(field, q.clone(), l)?;
    let eps = epsilon(&q);
    let n = q.num_vertices();
    let mut summands = Vec::with_capacity(n);
    for i in 0..n {
        let source = if eps.contains(i) {
            alg.injective(i)
        } else {
            alg.simple(i)
        };
        let (t, _) = pinf_approximation(&source)?;
        summands.push(t);
    }
    for (i, t) in summands.iter().enumerate() {
        if !is_indecomposable(t)? {
            return Err(Error::Verification(format!("T_{} is decomposable", i + 1)));
        }
        for (j, u) in summands.iter().enumerate().skip(i + 1) {
            if are_isomorphic(t, u) {
                return Err(Error::Verification(format!(
                    "T_{} and T_{} are isomorphic",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let cap = n * l + 2;
    let mut pdim = 0;
    for (i, t) in summands.iter().enumerate() {
        match t.projective_dimension(cap) {
            Some(d) => pdim = pdim.max(d),
            None => {
                return Err(Error::Verification(format!(
                    "T_{} has projective dimension above {cap}",
                    i + 1
                )))
            }
        }
    }
    for k in 1..=pdim {
        for (i, t) in summands.iter().enumerate() {
            for (j, u) in summands.iter().enumerate() {
                if ext_dimension(t, u, k) != 0 {
                    return Err(Error::Verification(format!(
                        "Ext^{k}(T_{}, T_{}) is nonzero",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    Ok(TiltingModule {
        epsilon: eps,
        summands,
        projective_dimension: pdim,
    })
}
