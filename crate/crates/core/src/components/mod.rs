//! Irreducible components of `rep_d(Λ_L)`.
//!
//! Every component is the closure of some `rep S` for a realizable `S`, and
//! `rep S` is a component iff its generic module has no filtration governed
//! by another realizable sequence. Containments `rep S ⊆ Filt S'` are
//! decided by the rank test in [`incidence`](self) by default, or by an
//! exhaustive filtration search on a generic module over a prime field.

mod filtration;
mod incidence;

pub use filtration::{has_governed_filtration, FiltrationWitness, SearchMode};
pub use incidence::RelativePosition;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{Field, FieldSpec, Matrix, PrimeField, Rationals};
use crate::modrep::Representation;
use crate::quiver::Quiver;
use crate::seed::rng_for;
use crate::ssq::{
    dominance, dominance_leq, is_realizable, realizable_sequences, Dominance, SemisimpleSequence,
};
use crate::Error;

/// Resampling budget of [`generic_module`].
pub const GENERIC_RETRIES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Filtration(FiltrationWitness),
    /// A relative position of an `S`-flag and an `S'`-flag whose stratum is
    /// dense in `Filt S`.
    RelativePosition {
        tables: RelativePosition,
    },
}

/// Three-valued answer with its epistemic status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict3 {
    Yes {
        witness: Witness,
    },
    /// Refuted by a complete search over a finite field.
    NoExhaustive,
    /// Refuted in each of `trials` independent random trials.
    NoMonteCarlo {
        trials: usize,
    },
    Unknown,
}

impl Verdict3 {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict3::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict3::NoExhaustive | Verdict3::NoMonteCarlo { .. })
    }

    pub fn tag(&self) -> String {
        match self {
            Verdict3::Yes { .. } => "yes".into(),
            Verdict3::NoExhaustive => "no_exhaustive".into(),
            Verdict3::NoMonteCarlo { trials } => format!("no_monte_carlo({trials})"),
            Verdict3::Unknown => "unknown".into(),
        }
    }
}

/// How containments between `rep S` and `Filt S'` are decided.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecisionMode {
    /// Rank of the incidence differential at random points.
    IncidenceRank,
    /// Complete filtration search on generic modules built over `F_p`.
    Exhaustive { p: u64 },
}

impl DecisionMode {
    pub fn label(&self) -> String {
        match self {
            DecisionMode::IncidenceRank => "incidence_rank".into(),
            DecisionMode::Exhaustive { p } => format!("exhaustive_f{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentConfig {
    pub seed: u64,
    /// Independent trials per containment question.
    pub trials: usize,
    /// Random points per trial in the rank test.
    pub samples: usize,
    pub mode: DecisionMode,
}

impl Default for ComponentConfig {
    fn default() -> Self {
        ComponentConfig {
            seed: 0,
            trials: 3,
            samples: 2,
            mode: DecisionMode::IncidenceRank,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Every realizable sequence below `S` was tested and refuted.
    GammaOne {
        refuted: usize,
        unresolved: Vec<SemisimpleSequence>,
    },
    /// No realizable sequence lies strictly below `S`, so nothing can govern
    /// another filtration of the generic module.
    Dominated,
    /// `rep S` lies in the closure of `rep S'`.
    GovernedBy { sequence: SemisimpleSequence },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theta {
    pub radical: SemisimpleSequence,
    pub socle: SemisimpleSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub sequence: SemisimpleSequence,
    pub is_component: bool,
    pub evidence: Evidence,
    /// Radical and socle layering of the sampled generic module.
    pub theta: Theta,
    pub field: FieldSpec,
    pub seed: u64,
    pub mode: String,
}

/// A module with radical layering exactly `s`, built from strictly
/// layer-raising random matrices.
pub fn generic_module<F: Field>(
    q: &Arc<Quiver>,
    l: usize,
    s: &SemisimpleSequence,
    field: F,
    seed: u64,
) -> Result<Representation<F>, Error> {
    if s.num_vertices() != q.num_vertices() {
        return Err(Error::InvalidInput(format!(
            "sequence {s} does not match a quiver with {} vertices",
            q.num_vertices()
        )));
    }
    let s = s.with_len(l)?;
    if !is_realizable(q, &s) {
        return Err(Error::InvalidInput(format!(
            "sequence {s} is not realizable"
        )));
    }
    let n = q.num_vertices();
    let dims = s.total();
    // layer of each basis vector, per vertex
    let layer_of: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..l)
                .flat_map(|k| std::iter::repeat_n(k, s.layer(k)[v]))
                .collect()
        })
        .collect();
    let mut rng = rng_for(seed, &format!("generic_module {s}"));
    for _ in 0..GENERIC_RETRIES {
        let maps = q
            .arrows()
            .iter()
            .map(|a| {
                let (rt, cs) = (dims[a.target], dims[a.source]);
                let mut m = Matrix::zeros(&field, rt, cs);
                for r in 0..rt {
                    for c in 0..cs {
                        if layer_of[a.target][r] > layer_of[a.source][c] {
                            m.set(r, c, field.random(&mut rng));
                        }
                    }
                }
                m
            })
            .collect();
        let g = Representation::from_parts(field.clone(), q.clone(), l, dims.clone(), maps);
        if g.radical_layering() == s {
            return Ok(g);
        }
    }
    Err(Error::SamplerExhausted(format!(
        "no module with radical layering {s} after {GENERIC_RETRIES} samples over {}; try a larger field",
        field.spec()
    )))
}

/// Number of realizable sequences governing some filtration of `r`, with a
/// flag telling whether every sub-verdict was definitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma {
    pub value: usize,
    pub exact: bool,
}

pub fn gamma<F: Field>(r: &Representation<F>, mode: &SearchMode) -> Result<Gamma, Error> {
    let top = r.radical_layering();
    let mut value = 0;
    let mut exact = true;
    for s in realizable_sequences(r.quiver(), r.dims(), r.l()) {
        if !dominance_leq(&s, &top)? {
            continue;
        }
        if s == top {
            // the radical filtration itself
            value += 1;
            continue;
        }
        match has_governed_filtration(r, &s, mode)? {
            Verdict3::Yes { .. } => value += 1,
            Verdict3::NoExhaustive => {}
            _ => exact = false,
        }
    }
    Ok(Gamma { value, exact })
}

/// Is `rep S` (at length `s.len()`) contained in `Filt S'` (at length
/// `t.len() >= s.len()`)?
pub fn containment<F: Field>(
    q: &Arc<Quiver>,
    s: &SemisimpleSequence,
    t: &SemisimpleSequence,
    field: &F,
    config: &ComponentConfig,
) -> Result<Verdict3, Error> {
    if s.total() != t.total() {
        return Err(Error::InvalidInput(format!(
            "sequences {s} and {t} have different dimension vectors"
        )));
    }
    if s.len() > t.len() {
        return Err(Error::InvalidInput(format!(
            "containment is tested from shorter to longer truncations, got {} > {}",
            s.len(),
            t.len()
        )));
    }
    let trials = config.trials.max(1);
    match config.mode {
        DecisionMode::IncidenceRank => {
            let s_pad = s.with_len(t.len())?;
            // small fields need more points to hit the generic rank
            let samples = match field.order() {
                Some(o) if o < 50 => config.samples.max(1) * 8,
                _ => config.samples.max(1),
            };
            for trial in 0..trials {
                let mut rng = rng_for(
                    config.seed,
                    &format!("containment {s} in {t} trial {trial}"),
                );
                if let Some(w) =
                    incidence::find_dense_position(q, &s_pad, t, field, &mut rng, samples)
                {
                    // the rank bound makes a single hit conclusive
                    return Ok(Verdict3::Yes {
                        witness: Witness::RelativePosition { tables: w },
                    });
                }
            }
            Ok(Verdict3::NoMonteCarlo { trials })
        }
        DecisionMode::Exhaustive { p } => {
            let fp = PrimeField::new(p)?;
            // Samples over F_p can be degenerate (false yes) or miss flags
            // defined over an extension (false no). Only samples with the
            // generic invariants count, and one hit among them decides.
            let reference = generic_profile(&generic_module(
                q,
                s.len(),
                s,
                Rationals::default(),
                config.seed,
            )?);
            let wanted = if p < 50 { trials * 8 } else { trials };
            let (mut accepted, mut yes) = (0, None);
            for draw in 0..wanted * GENERIC_DRAWS {
                if accepted == wanted {
                    break;
                }
                let g = generic_module(
                    q,
                    s.len(),
                    s,
                    fp.clone(),
                    config.seed.wrapping_add(draw as u64),
                )?;
                if generic_profile(&g) != reference {
                    continue;
                }
                accepted += 1;
                if let v @ Verdict3::Yes { .. } =
                    has_governed_filtration(&g.with_l(t.len())?, t, &SearchMode::Exhaustive)?
                {
                    yes = Some(v);
                    break;
                }
            }
            Ok(match yes {
                Some(v) => v,
                None if accepted > 0 => Verdict3::NoExhaustive,
                None => Verdict3::Unknown,
            })
        }
    }
}

/// Draws per wanted sample before giving up on finding generic ones.
const GENERIC_DRAWS: usize = 20;

/// Radical and socle layering plus the rank of every path map: the
/// invariants a sample must share with a rational generic module.
fn generic_profile<F: Field>(g: &Representation<F>) -> (Theta, Vec<usize>) {
    let (radical, socle) = g.theta();
    let ranks = g
        .quiver()
        .enumerate_paths(g.l().saturating_sub(1))
        .iter()
        .filter(|p| !p.is_lazy())
        .map(|p| g.path_action(p).rank(g.field()))
        .collect();
    (Theta { radical, socle }, ranks)
}

/// All candidate sequences of `rep_d(Λ_L)` with their component status,
/// in the order of [`realizable_sequences`].
pub fn classify_components<F: Field>(
    q: &Arc<Quiver>,
    l: usize,
    d: &[usize],
    field: &F,
    config: &ComponentConfig,
) -> Result<Vec<ComponentReport>, Error> {
    if d.len() != q.num_vertices() {
        return Err(Error::InvalidInput(format!(
            "dimension vector has {} entries, quiver has {} vertices",
            d.len(),
            q.num_vertices()
        )));
    }
    let candidates = realizable_sequences(q, d, l);
    candidates
        .par_iter()
        .map(|s| classify_one(q, l, s, &candidates, field, config))
        .collect()
}

fn classify_one<F: Field>(
    q: &Arc<Quiver>,
    l: usize,
    s: &SemisimpleSequence,
    candidates: &[SemisimpleSequence],
    field: &F,
    config: &ComponentConfig,
) -> Result<ComponentReport, Error> {
    let g = generic_module(q, l, s, field.clone(), config.seed)?;
    let (radical, socle) = g.theta();
    let below: Vec<&SemisimpleSequence> = candidates
        .iter()
        .filter(|t| matches!(dominance(t, s), Ok(Dominance::Less)))
        .collect();
    let mut evidence = if below.is_empty() {
        Evidence::Dominated
    } else {
        Evidence::GammaOne {
            refuted: 0,
            unresolved: Vec::new(),
        }
    };
    for t in below {
        let v = containment(q, s, t, field, config)?;
        match (&v, &mut evidence) {
            (Verdict3::Yes { .. }, _) => {
                evidence = Evidence::GovernedBy {
                    sequence: t.clone(),
                };
                break;
            }
            (Verdict3::Unknown, Evidence::GammaOne { unresolved, .. }) => {
                unresolved.push(t.clone())
            }
            (_, Evidence::GammaOne { refuted, .. }) => *refuted += 1,
            _ => {}
        }
    }
    Ok(ComponentReport {
        sequence: s.clone(),
        is_component: !matches!(evidence, Evidence::GovernedBy { .. }),
        evidence,
        theta: Theta { radical, socle },
        field: field.spec(),
        seed: config.seed,
        mode: config.mode.label(),
    })
}

/// Components only, in the same order.
pub fn component_sequences<F: Field>(
    q: &Arc<Quiver>,
    l: usize,
    d: &[usize],
    field: &F,
    config: &ComponentConfig,
) -> Result<Vec<SemisimpleSequence>, Error> {
    Ok(classify_components(q, l, d, field, config)?
        .into_iter()
        .filter(|r| r.is_component)
        .map(|r| r.sequence)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyLevel {
    #[serde(rename = "L")]
    pub l: usize,
    pub components: Vec<SemisimpleSequence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyEdge {
    /// `(L, index into that level's components)`.
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub verdict: Verdict3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hierarchy {
    pub levels: Vec<HierarchyLevel>,
    /// One entry per pair of components on consecutive levels; containments
    /// are the entries with a `yes` verdict.
    pub edges: Vec<HierarchyEdge>,
}

impl Hierarchy {
    /// Containment pairs as `((L, i), (L', j))`.
    pub fn containments(&self) -> Vec<((usize, usize), (usize, usize))> {
        self.edges
            .iter()
            .filter(|e| e.verdict.is_yes())
            .map(|e| (e.from, e.to))
            .collect()
    }
}

/// Components for each `L` in `levels` and the containments between
/// consecutive levels (a module over `Λ_L` is one over `Λ_{L+1}`).
pub fn hierarchy<F: Field>(
    q: &Arc<Quiver>,
    d: &[usize],
    levels: &[usize],
    field: &F,
    config: &ComponentConfig,
) -> Result<Hierarchy, Error> {
    let mut out = Vec::new();
    for &l in levels {
        out.push(HierarchyLevel {
            l,
            components: component_sequences(q, l, d, field, config)?,
        });
    }
    let mut jobs = Vec::new();
    for w in out.windows(2) {
        for (i, s) in w[0].components.iter().enumerate() {
            for (j, t) in w[1].components.iter().enumerate() {
                jobs.push(((w[0].l, i), (w[1].l, j), s.clone(), t.clone()));
            }
        }
    }
    let edges = jobs
        .par_iter()
        .map(|(from, to, s, t)| {
            Ok(HierarchyEdge {
                from: *from,
                to: *to,
                verdict: containment(q, s, t, field, config)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Hierarchy { levels: out, edges })
}

/// Closed form for the quiver with one vertex and `r >= 2` loops.
pub fn local_components(r: usize, d: usize, l: usize) -> Result<Vec<SemisimpleSequence>, Error> {
    if r < 2 || d == 0 || l == 0 {
        return Err(Error::InvalidInput(
            "the closed form needs at least two loops, d >= 1 and L >= 1".into(),
        ));
    }
    if l >= d {
        return Ok(vec![SemisimpleSequence::local(&vec![1; d])]);
    }
    let mut out = Vec::new();
    for s in crate::ssq::enumerate_sequences(&[d], l) {
        let dims: Vec<usize> = s.layers().iter().map(|x| x[0]).collect();
        let nonzero = dims.iter().all(|&x| x > 0);
        let balanced = dims
            .windows(2)
            .all(|w| w[1] <= r * w[0] && w[0] <= r * w[1]);
        if nonzero && balanced {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
