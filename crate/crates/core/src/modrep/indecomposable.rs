use super::hom::hom_space;
use super::Representation;
use crate::linalg::{Field, FieldSpec, Matrix};
use crate::Error;

/// `tr(x y)` for block-diagonal endomorphisms given per vertex.
fn trace_product<F: Field>(f: &F, x: &[Matrix<F::Elem>], y: &[Matrix<F::Elem>]) -> F::Elem {
    let mut acc = f.zero();
    for (a, b) in x.iter().zip(y) {
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let (u, v) = (a.get(i, j), b.get(j, i));
                if !f.is_zero(u) && !f.is_zero(v) {
                    acc = f.add(&acc, &f.mul(u, v));
                }
            }
        }
    }
    acc
}

/// The trace form detects the radical only in characteristic 0 or above
/// the size of the matrices (Newton's identities).
fn check_trace_form<F: Field>(f: &F, size: usize) -> Result<(), Error> {
    match f.spec() {
        FieldSpec::Rationals => Ok(()),
        FieldSpec::Prime { p } if p as usize > size => Ok(()),
        FieldSpec::Prime { p } => Err(Error::Unsupported(format!(
            "trace-form radical over F_{p} needs p > {size}"
        ))),
    }
}

/// Whether the algebra spanned by the given block-diagonal matrices (closed
/// under products and containing the identity) is local.
pub fn is_local_algebra<F: Field>(f: &F, basis: &[Vec<Matrix<F::Elem>>]) -> Result<bool, Error> {
    let size: usize = basis
        .first()
        .map_or(0, |b| b.iter().map(|m| m.rows()).sum());
    check_trace_form(f, size)?;
    let k = basis.len();
    if k == 0 {
        return Ok(false);
    }
    let mut gram = Matrix::zeros(f, k, k);
    for i in 0..k {
        for j in i..k {
            let t = trace_product(f, &basis[i], &basis[j]);
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    Ok(gram.rank(f) == 1)
}

/// A nonzero module is indecomposable iff its endomorphism ring is local.
pub fn is_indecomposable<F: Field>(r: &Representation<F>) -> Result<bool, Error> {
    if r.is_zero() {
        return Err(Error::InvalidInput(
            "the zero module is not indecomposable".into(),
        ));
    }
    let end = hom_space(r, r);
    is_local_algebra(r.field(), &end.maps)
}

fn is_nilpotent_family<F: Field>(f: &F, x: &[Matrix<F::Elem>]) -> bool {
    x.iter().all(|m| m.is_nilpotent(f))
}

/// Isomorphism test for two indecomposable modules.
pub fn are_isomorphic<F: Field>(m: &Representation<F>, n: &Representation<F>) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let f = m.field();
    let mn = hom_space(m, n);
    let nm = hom_space(n, m);
    for a in &mn.maps {
        for b in &nm.maps {
            let comp: Vec<Matrix<F::Elem>> = a.iter().zip(b).map(|(x, y)| y.mul(f, x)).collect();
            if !is_nilpotent_family(f, &comp) {
                return true;
            }
        }
    }
    false
}
