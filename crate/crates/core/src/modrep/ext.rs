//! Syzygies, projective dimension and `Ext` through projective covers.

use super::{hom_dimension, Representation};
use crate::linalg::Field;

impl<F: Field> Representation<F> {
    /// `Ω M`, the kernel of the projective cover.
    pub fn syzygy(&self) -> Representation<F> {
        self.projective_cover().kernel_module()
    }

    /// Projective dimension, or `None` if it exceeds `cap`.
    pub fn projective_dimension(&self, cap: usize) -> Option<usize> {
        let mut m = self.clone();
        for k in 0..=cap {
            let omega = m.syzygy();
            if omega.is_zero() {
                return Some(k);
            }
            m = omega;
        }
        None
    }
}

/// `dim Ext^k(M, N)` for `k >= 1`, from
/// `0 -> Hom(Z, N) -> Hom(P(Z), N) -> Hom(ΩZ, N) -> Ext^1(Z, N) -> 0`
/// with `Z = Ω^{k-1} M`.
pub fn ext_dimension<F: Field>(m: &Representation<F>, n: &Representation<F>, k: usize) -> usize {
    assert!(k >= 1, "Ext is computed in positive degrees");
    let mut z = m.clone();
    for _ in 1..k {
        z = z.syzygy();
    }
    let cover = z.projective_cover();
    let hom_p: usize = cover.generators.iter().map(|&(v, _)| n.dim(v)).sum();
    let omega = cover.kernel_module();
    hom_dimension(&omega, n) + hom_dimension(&z, n) - hom_p
}
