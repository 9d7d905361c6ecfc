//! Backtracking search for filtrations governed by a semisimple sequence.

use serde::{Deserialize, Serialize};

use super::Verdict3;
use crate::linalg::{enumerate_subspaces, Field, FieldSpec, PrimeField, Subspace};
use crate::modrep::{Family, Representation};
use crate::ssq::SemisimpleSequence;
use crate::Error;

/// A chain `M = M_0 ⊃ M_1 ⊃ ... ⊃ M_L = 0` with `J M_l ⊆ M_{l+1}` and
/// `M_l / M_{l+1}` of dimension vector `S_l`. Subspaces are stored as basis
/// vectors per vertex in exact string form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationWitness {
    pub sequence: SemisimpleSequence,
    pub field: FieldSpec,
    /// `chain[l][v]` is a basis of `(M_l)_v`.
    pub chain: Vec<Vec<Vec<Vec<String>>>>,
}

impl FiltrationWitness {
    fn new(sequence: &SemisimpleSequence, field: FieldSpec, chain: &[Family<u64>]) -> Self {
        FiltrationWitness {
            sequence: sequence.clone(),
            field,
            chain: chain
                .iter()
                .map(|fam| {
                    fam.iter()
                        .map(|s| {
                            s.basis()
                                .iter()
                                .map(|v| v.iter().map(|x| x.to_string()).collect())
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Re-check the defining conditions against a module over the witness
    /// field.
    pub fn verify<F: Field>(&self, r: &Representation<F>) -> Result<bool, Error> {
        if r.field().spec() != self.field {
            return Ok(false);
        }
        let f = r.field();
        let mut fams: Vec<Family<F::Elem>> = Vec::new();
        for layer in &self.chain {
            let mut fam = Vec::new();
            for (v, vecs) in layer.iter().enumerate() {
                let parsed = vecs
                    .iter()
                    .map(|vec| {
                        vec.iter()
                            .map(|x| f.parse(x))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                fam.push(Subspace::span(f, r.dim(v), &parsed));
            }
            fams.push(fam);
        }
        let l = self.sequence.len();
        if fams.len() != l + 1 || fams[0] != r.full_family() || fams[l].iter().any(|s| !s.is_zero())
        {
            return Ok(false);
        }
        for k in 0..l {
            let j = r.radical_of(&fams[k]);
            for v in 0..r.dims().len() {
                if !fams[k + 1][v].contains_subspace(f, &j[v])
                    || !fams[k][v].contains_subspace(f, &fams[k + 1][v])
                    || fams[k][v].dim() - fams[k + 1][v].dim() != self.sequence.layer(k)[v]
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// How [`has_governed_filtration`] decides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchMode {
    /// Complete search; the module must be over a prime field.
    Exhaustive,
    /// Reduce the module modulo each prime and search there.
    Replay { primes: Vec<u64> },
}

impl SearchMode {
    pub fn replay_default() -> Self {
        SearchMode::Replay {
            primes: vec![101, 103, 107],
        }
    }
}

/// Does `r` have a filtration governed by `s`?
pub fn has_governed_filtration<F: Field>(
    r: &Representation<F>,
    s: &SemisimpleSequence,
    mode: &SearchMode,
) -> Result<Verdict3, Error> {
    if s.total() != r.dims() {
        return Err(Error::InvalidInput(format!(
            "sequence {s} has total {:?}, module has dimension vector {:?}",
            s.total(),
            r.dims()
        )));
    }
    match mode {
        SearchMode::Exhaustive => {
            let p = match r.field().spec() {
                FieldSpec::Prime { p } => p,
                FieldSpec::Rationals => {
                    return Err(Error::InvalidInput(
                        "exhaustive filtration search needs a prime field".into(),
                    ))
                }
            };
            let m = r.convert(PrimeField::new(p)?)?;
            Ok(match search(&m, s) {
                Some(chain) => Verdict3::Yes {
                    witness: super::Witness::Filtration(FiltrationWitness::new(
                        s,
                        m.field().spec(),
                        &chain,
                    )),
                },
                None => Verdict3::NoExhaustive,
            })
        }
        SearchMode::Replay { primes } => {
            let mut first_yes = None;
            let (mut yes, mut no) = (0, 0);
            for &p in primes {
                // primes dividing a denominator are skipped
                let Ok(m) = r.convert(PrimeField::new(p)?) else {
                    continue;
                };
                match search(&m, s) {
                    Some(chain) => {
                        yes += 1;
                        first_yes.get_or_insert_with(|| {
                            FiltrationWitness::new(s, m.field().spec(), &chain)
                        });
                    }
                    None => no += 1,
                }
            }
            Ok(match (yes, no, first_yes) {
                (y, 0, Some(w)) if y > 0 => Verdict3::Yes {
                    witness: super::Witness::Filtration(w),
                },
                (0, n, _) if n > 0 => Verdict3::NoMonteCarlo { trials: n },
                _ => Verdict3::Unknown,
            })
        }
    }
}

/// Prefix sums of the tail `s[from..]` are bounded by those of the radical
/// layering of `u`; in particular `J^{len} u = 0`.
fn tail_feasible(
    m: &Representation<PrimeField>,
    u: &Family<u64>,
    s: &SemisimpleSequence,
    from: usize,
) -> bool {
    let n = m.dims().len();
    let total: Vec<usize> = u.iter().map(|x| x.dim()).collect();
    let mut tail_prefix = vec![0usize; n];
    let mut cur = u.clone();
    for k in from..s.len() {
        for v in 0..n {
            tail_prefix[v] += s.layer(k)[v];
        }
        cur = m.radical_of(&cur);
        for v in 0..n {
            // dim(u / J^{k-from+1} u) >= dim(u / M_{k+1})
            if total[v] - cur[v].dim() < tail_prefix[v] {
                return false;
            }
        }
    }
    true
}

pub(crate) fn search(
    m: &Representation<PrimeField>,
    s: &SemisimpleSequence,
) -> Option<Vec<Family<u64>>> {
    let full = m.full_family();
    if !tail_feasible(m, &full, s, 0) {
        return None;
    }
    let mut chain = vec![full.clone()];
    if descend(m, s, 0, &full, &mut chain) {
        Some(chain)
    } else {
        None
    }
}

fn descend(
    m: &Representation<PrimeField>,
    s: &SemisimpleSequence,
    level: usize,
    cur: &Family<u64>,
    chain: &mut Vec<Family<u64>>,
) -> bool {
    let f = m.field();
    let n = m.dims().len();
    if level == s.len() {
        return cur.iter().all(|x| x.is_zero());
    }
    let jm = m.radical_of(cur);
    // complement of J·cur inside cur, per vertex
    let mut comps: Vec<Vec<Vec<u64>>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut span = jm[v].clone();
        let mut c = Vec::new();
        for x in cur[v].basis() {
            if !span.contains(f, x) {
                span = span.sum(f, &Subspace::span(f, x.len(), std::slice::from_ref(x)));
                c.push(x.clone());
            }
        }
        let need = s.layer(level)[v];
        if c.len() < need {
            return false;
        }
        comps.push(c);
    }
    let mut next = jm.clone();
    choose(m, s, level, &jm, &comps, 0, &mut next, chain)
}

#[allow(clippy::too_many_arguments)]
fn choose(
    m: &Representation<PrimeField>,
    s: &SemisimpleSequence,
    level: usize,
    jm: &Family<u64>,
    comps: &[Vec<Vec<u64>>],
    v: usize,
    next: &mut Family<u64>,
    chain: &mut Vec<Family<u64>>,
) -> bool {
    let f = m.field();
    if v == comps.len() {
        if !tail_feasible(m, next, s, level + 1) {
            return false;
        }
        chain.push(next.clone());
        let snapshot = next.clone();
        if descend(m, s, level + 1, &snapshot, chain) {
            return true;
        }
        chain.pop();
        return false;
    }
    let t = comps[v].len();
    let k = t - s.layer(level)[v];
    let iter = enumerate_subspaces(f, t, k).expect("k <= t");
    for w in iter {
        let lifted: Vec<Vec<u64>> = w
            .basis()
            .iter()
            .map(|coef| {
                let mut x = vec![0u64; m.dim(v)];
                for (c, vec) in coef.iter().zip(&comps[v]) {
                    if *c != 0 {
                        for (xi, vi) in x.iter_mut().zip(vec) {
                            *xi = f.add(xi, &f.mul(c, vi));
                        }
                    }
                }
                x
            })
            .collect();
        next[v] = jm[v].sum(f, &Subspace::span(f, m.dim(v), &lifted));
        if choose(m, s, level, jm, comps, v + 1, next, chain) {
            return true;
        }
    }
    false
}
