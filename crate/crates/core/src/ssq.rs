//! Semisimple sequences: enumeration, dominance order, realizability.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quiver::Quiver;
use crate::Error;

/// An `L`-tuple of dimension vectors `(S_0, ..., S_{L-1})`, one per layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SemisimpleSequence(pub Vec<Vec<usize>>);

impl SemisimpleSequence {
    pub fn new(layers: Vec<Vec<usize>>) -> Self {
        SemisimpleSequence(layers)
    }

    /// One-vertex sequence from layer dimensions.
    pub fn local(dims: &[usize]) -> Self {
        SemisimpleSequence(dims.iter().map(|&x| vec![x]).collect())
    }

    /// Sequence with all of `d` in the top layer, padded to length `l`.
    pub fn semisimple(d: &[usize], l: usize) -> Self {
        let mut layers = vec![vec![0; d.len()]; l.max(1)];
        layers[0] = d.to_vec();
        SemisimpleSequence(layers)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn layer(&self, l: usize) -> &[usize] {
        &self.0[l]
    }

    pub fn num_vertices(&self) -> usize {
        self.0.first().map_or(0, |l| l.len())
    }

    /// Total dimension vector.
    pub fn total(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut t = vec![0; n];
        for layer in &self.0 {
            for (x, y) in t.iter_mut().zip(layer) {
                *x += y;
            }
        }
        t
    }

    pub fn total_dim(&self) -> usize {
        self.0.iter().flatten().sum()
    }

    /// Number of layers up to the last nonzero one.
    pub fn effective_len(&self) -> usize {
        self.0
            .iter()
            .rposition(|l| l.iter().any(|&x| x > 0))
            .map_or(0, |p| p + 1)
    }

    /// Pad with zero layers (or drop trailing zero layers) to length `l`.
    pub fn with_len(&self, l: usize) -> Result<Self, Error> {
        if self.effective_len() > l {
            return Err(Error::InvalidInput(format!(
                "sequence {self} has more than {l} nonzero layers"
            )));
        }
        let n = self.num_vertices();
        let mut layers = self.0.clone();
        layers.resize(l, vec![0; n]);
        Ok(SemisimpleSequence(layers))
    }

    pub fn reversed(&self) -> Self {
        let e = self.effective_len();
        let mut layers: Vec<Vec<usize>> = self.0[..e].iter().rev().cloned().collect();
        layers.resize(self.len(), vec![0; self.num_vertices()]);
        SemisimpleSequence(layers)
    }

    /// Prefix sums `S_0 + ... + S_m` for every `m`.
    pub fn prefix_sums(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut acc = vec![0; n];
        self.0
            .iter()
            .map(|layer| {
                for (a, x) in acc.iter_mut().zip(layer) {
                    *a += x;
                }
                acc.clone()
            })
            .collect()
    }
}

impl fmt::Display for SemisimpleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num_vertices();
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|layer| {
                if n == 1 {
                    return layer[0].to_string();
                }
                let terms: Vec<String> = layer
                    .iter()
                    .enumerate()
                    .filter(|&(_, &m)| m > 0)
                    .map(|(i, &m)| {
                        if m == 1 {
                            format!("S{}", i + 1)
                        } else {
                            format!("S{}^{}", i + 1, m)
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Compare two sequences with the same total by their prefix sums.
pub fn dominance(s: &SemisimpleSequence, t: &SemisimpleSequence) -> Result<Dominance, Error> {
    if s.total() != t.total() {
        return Err(Error::InvalidInput(format!(
            "sequences {s} and {t} have different dimension vectors"
        )));
    }
    let l = s.len().max(t.len());
    let (s, t) = (s.with_len(l)?, t.with_len(l)?);
    let (mut le, mut ge) = (true, true);
    for (a, b) in s.prefix_sums().iter().zip(t.prefix_sums().iter()) {
        for (x, y) in a.iter().zip(b) {
            le &= x <= y;
            ge &= x >= y;
        }
    }
    Ok(match (le, ge) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Less,
        (false, true) => Dominance::Greater,
        (false, false) => Dominance::Incomparable,
    })
}

/// `s <= t` in the dominance order.
pub fn dominance_leq(s: &SemisimpleSequence, t: &SemisimpleSequence) -> Result<bool, Error> {
    Ok(matches!(
        dominance(s, t)?,
        Dominance::Less | Dominance::Equal
    ))
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// lexicographically decreasing order of the first part.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// Every `l`-tuple of dimension vectors summing to `d`.
pub fn enumerate_sequences(d: &[usize], l: usize) -> Vec<SemisimpleSequence> {
    assert!(l >= 1, "sequences need at least one layer");
    // per-vertex compositions, combined as a product
    let per_vertex: Vec<Vec<Vec<usize>>> = d.iter().map(|&m| compositions(m, l)).collect();
    let mut out = vec![vec![vec![0usize; d.len()]; l]];
    for (v, comps) in per_vertex.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * comps.len());
        for partial in &out {
            for c in comps {
                let mut s = partial.clone();
                for (layer, &x) in s.iter_mut().zip(c) {
                    layer[v] = x;
                }
                next.push(s);
            }
        }
        out = next;
    }
    out.into_iter().map(SemisimpleSequence).collect()
}

/// Cone condition `S_{l+1} <= A * S_l` for every layer.
pub fn is_realizable(q: &Quiver, s: &SemisimpleSequence) -> bool {
    let a = q.adjacency();
    s.0.windows(2).all(|w| {
        let (upper, lower) = (&w[0], &w[1]);
        (0..q.num_vertices()).all(|j| {
            let reach: usize = (0..q.num_vertices()).map(|i| a[j][i] * upper[i]).sum();
            lower[j] <= reach
        })
    })
}

/// Realizable sequences in `S(d)` of length `l`.
pub fn realizable_sequences(q: &Quiver, d: &[usize], l: usize) -> Vec<SemisimpleSequence> {
    enumerate_sequences(d, l)
        .into_iter()
        .filter(|s| is_realizable(q, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::examples::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_sequences(&[5], 2).len(), 6);
        assert_eq!(enumerate_sequences(&[0, 0], 3).len(), 1);
        // oracle: product over vertices of the number of compositions of
        // d_i into L parts, C(d_i + L - 1, L - 1)
        let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        for d in [[1usize, 1], [2, 2], [3, 1]] {
            for l in 1..=4 {
                let expect: usize = d.iter().map(|&m| binom(m + l - 1, l - 1)).product();
                assert_eq!(enumerate_sequences(&d, l).len(), expect);
            }
        }
        assert_eq!(enumerate_sequences(&[1, 1], 2).len(), 4);
        assert_eq!(enumerate_sequences(&[2, 2], 2).len(), 9);
        let all = enumerate_sequences(&[1, 1], 2);
        assert!(all.iter().all(|s| s.total() == vec![1, 1]));
    }

    #[test]
    fn dominance_examples() {
        let s = SemisimpleSequence::local(&[1, 1, 2, 1]);
        let t = SemisimpleSequence::local(&[2, 1, 2, 0]);
        assert_eq!(dominance(&s, &t).unwrap(), Dominance::Less);
        assert_eq!(dominance(&s, &s).unwrap(), Dominance::Equal);
        let a = SemisimpleSequence::local(&[1, 0, 1]);
        let b = SemisimpleSequence::local(&[0, 2, 0]);
        assert_eq!(dominance(&a, &b).unwrap(), Dominance::Incomparable);
        assert!(dominance(&a, &SemisimpleSequence::local(&[3])).is_err());
    }

    #[test]
    fn realizability_examples() {
        let q = loops(2);
        assert!(is_realizable(&q, &SemisimpleSequence::local(&[1, 1, 2, 1])));
        assert!(!is_realizable(&q, &SemisimpleSequence::local(&[1, 3, 1])));
        let c = two_cycle();
        assert!(is_realizable(
            &c,
            &SemisimpleSequence(vec![vec![1, 0], vec![0, 1]])
        ));
        assert!(!is_realizable(
            &c,
            &SemisimpleSequence(vec![vec![1, 0], vec![1, 0]])
        ));
    }

    #[test]
    fn display_forms() {
        let s = SemisimpleSequence(vec![vec![0, 1], vec![2, 0], vec![0, 1], vec![0, 0]]);
        assert_eq!(s.to_string(), "(S2, S1^2, S2, 0)");
        assert_eq!(SemisimpleSequence::local(&[2, 3]).to_string(), "(2, 3)");
        assert_eq!(s.reversed(), s);
        assert_eq!(s.effective_len(), 3);
    }
}
