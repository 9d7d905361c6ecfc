//! Exact linear algebra over the rationals and prime fields.

mod field;
mod matrix;
mod rat;
mod subspace;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::Matrix;
pub use rat::{ParseRatError, Rat};
pub use subspace::{
    enumerate_subspaces, enumerate_subspaces_spec, gaussian_binomial, SpanBuilder, Subspace,
    SubspaceIter,
};

use crate::seed::rng_for;

/// A random matrix that depends only on `seed`.
pub fn random_matrix<F: Field>(f: &F, rows: usize, cols: usize, seed: u64) -> Matrix<F::Elem> {
    let mut rng = rng_for(seed, "random_matrix");
    Matrix::random(f, rows, cols, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_matrix_is_deterministic() {
        let f = Rationals::default();
        assert_eq!(random_matrix(&f, 3, 4, 7), random_matrix(&f, 3, 4, 7));
        assert_ne!(random_matrix(&f, 3, 4, 7), random_matrix(&f, 3, 4, 8));
        let e = random_matrix(&f, 0, 0, 1);
        assert_eq!((e.rows(), e.cols()), (0, 0));
    }

    #[test]
    fn random_square_matrices_are_usually_invertible() {
        let f = PrimeField::new(101).unwrap();
        let full = (0..1000u64)
            .filter(|&s| random_matrix(&f, 5, 5, s).rank(&f) == 5)
            .count();
        // P(singular) is about 1/101 + 1/101^2 + ... ~ 0.0099
        assert!(full >= 980, "only {full} of 1000 had full rank");
    }
}
