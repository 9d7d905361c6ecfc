use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::endalg::{BasicAlgebra, RadicalChain};
use crate::linalg::{Field, Matrix, Subspace};
use crate::quiver::{Path, Quiver};
use crate::Error;

/// Path enumeration stops here; beyond it the presentation is refused.
pub const PATH_CAP: usize = 20_000;

/// A linear combination of parallel paths of `Q̃`, each path written
/// right to left as arrow ids joined by `*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub source: usize,
    pub target: usize,
    pub terms: Vec<(String, String)>,
}

/// Quiver and relations of a basic algebra with radical nilpotent of
/// index `loewy_length`.
#[derive(Debug, Clone, Serialize)]
pub struct Presentation {
    #[serde(serialize_with = "quiver_json")]
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Whether the relation ideal is spanned by the paths it contains.
    pub monomial: bool,
    pub loewy_length: usize,
    /// Pairs `(β, γ)` of arrows with `γβ` nonzero in the algebra.
    #[serde(skip)]
    pub nonzero_pairs: BTreeSet<(usize, usize)>,
}

fn quiver_json<S: serde::Serializer>(q: &Quiver, s: S) -> Result<S::Ok, S::Error> {
    q.to_json_value().serialize(s)
}

impl Presentation {
    /// `KQ / <paths of length L>`.
    pub fn truncated(q: &Quiver, l: usize) -> Presentation {
        let relations = q
            .enumerate_paths(l)
            .into_iter()
            .filter(|p| p.len() == l)
            .map(|p| Relation {
                source: p.start,
                target: p.end(q),
                terms: vec![("1".into(), p.display(q))],
            })
            .collect();
        let mut nonzero_pairs = BTreeSet::new();
        if l > 2 {
            for (b, arrow) in q.arrows().iter().enumerate() {
                for g in q.arrows_from(arrow.target) {
                    nonzero_pairs.insert((b, g));
                }
            }
        }
        let ll = match q.longest_path() {
            Some(m) => l.min(m + 1),
            None => l,
        };
        Presentation {
            quiver: q.clone(),
            relations,
            monomial: true,
            loewy_length: ll,
            nonzero_pairs,
        }
    }

    pub fn is_nonzero_pair(&self, beta: usize, gamma: usize) -> bool {
        self.nonzero_pairs.contains(&(beta, gamma))
    }
}

/// Quiver and relations of `Λ̃` from the chosen arrow lifts. A path of
/// `Q̃` maps to the composite of the lifts along it; relations are chosen
/// degree by degree among kernel elements not already in the ideal
/// generated so far, trying single paths first.
pub fn tilt_presentation<F: Field>(
    alg: &BasicAlgebra<F>,
    rad: &RadicalChain<F::Elem>,
) -> Result<Presentation, Error> {
    let f = alg.field();
    let q = rad.quiver();
    let ll = rad.loewy_length;
    let n = q.num_vertices();
    let lifts: Vec<_> = rad
        .arrow_lifts()
        .into_iter()
        .map(|(i, j, x)| alg.full_map(i, j, x))
        .collect();

    // images of all paths of length <= ll, breadth first
    let mut images: HashMap<Path, Vec<F::Elem>> = HashMap::new();
    let mut frontier: Vec<Path> = (0..n).map(Path::lazy).collect();
    for p in &frontier {
        images.insert(p.clone(), alg.identity(p.start));
    }
    let mut by_pair: Vec<Vec<Vec<Path>>> = vec![vec![Vec::new(); n]; n];
    for len in 1..=ll {
        let mut next = Vec::new();
        for p in &frontier {
            for a in q.arrows_from(p.end(&q)) {
                let np = p.then(a);
                let img = alg.apply(p.start, &lifts[a], &images[p]);
                if len >= 2 {
                    by_pair[np.start][np.end(&q)].push(np.clone());
                }
                images.insert(np.clone(), img);
                next.push(np);
            }
        }
        if images.len() > PATH_CAP {
            return Err(Error::Unsupported(format!(
                "the tilt quiver has more than {PATH_CAP} paths below the Loewy length"
            )));
        }
        frontier = next;
    }
    let index: HashMap<Path, usize> = by_pair
        .iter()
        .flatten()
        .flat_map(|ps| ps.iter().enumerate().map(|(k, p)| (p.clone(), k)))
        .collect();
    let zero = |p: &Path| images[p].iter().all(|x| f.is_zero(x));

    let mut nonzero_pairs = BTreeSet::new();
    for (b, arrow) in q.arrows().iter().enumerate() {
        for g in q.arrows_from(arrow.target) {
            if !zero(&Path::arrow(&q, b).then(g)) {
                nonzero_pairs.insert((b, g));
            }
        }
    }

    let mut closure: Vec<Vec<Subspace<F::Elem>>> = by_pair
        .iter()
        .map(|row| row.iter().map(|ps| Subspace::zero(ps.len())).collect())
        .collect();
    let mut relations = Vec::new();
    let mut monomial = true;
    for i in 0..n {
        for k in 0..n {
            let paths = &by_pair[i][k];
            if paths.is_empty() {
                continue;
            }
            let ambient = alg.ambient(i, k);
            let cols: Vec<Vec<F::Elem>> = paths.iter().map(|p| images[p].clone()).collect();
            let kernel = Matrix::from_columns(ambient, &cols).kernel(f);
            let zero_paths = paths.iter().filter(|p| zero(p)).count();
            if zero_paths != kernel.dim() {
                monomial = false;
            }
        }
    }
    for d in 2..=ll {
        for i in 0..n {
            for k in 0..n {
                let paths = &by_pair[i][k];
                let upto = paths.partition_point(|p| p.len() <= d);
                if upto == 0 {
                    continue;
                }
                let mut candidates: Vec<Vec<F::Elem>> = Vec::new();
                for (c, p) in paths[..upto].iter().enumerate() {
                    if p.len() == d && zero(p) {
                        candidates.push(unit(f, paths.len(), c));
                    }
                }
                let cols: Vec<Vec<F::Elem>> =
                    paths[..upto].iter().map(|p| images[p].clone()).collect();
                let kernel = Matrix::from_columns(alg.ambient(i, k), &cols).kernel(f);
                for v in kernel.basis() {
                    let mut w = v.clone();
                    w.resize(paths.len(), f.zero());
                    candidates.push(w);
                }
                for v in candidates {
                    if closure[i][k].contains(f, &v) {
                        continue;
                    }
                    relations.push(Relation {
                        source: i,
                        target: k,
                        terms: v
                            .iter()
                            .zip(paths)
                            .filter(|(c, _)| !f.is_zero(c))
                            .map(|(c, p)| (c.to_string(), p.display(&q)))
                            .collect(),
                    });
                    extend_ideal(f, &q, ll, &by_pair, &index, &mut closure, i, k, v);
                }
            }
        }
    }
    Ok(Presentation {
        quiver: q,
        relations,
        monomial,
        loewy_length: ll,
        nonzero_pairs,
    })
}

fn unit<F: Field>(f: &F, n: usize, k: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[k] = f.one();
    v
}

/// Adds `v` (in pair `(i, k)`) to the ideal and closes under multiplying
/// by arrows on both sides; paths longer than `ll` are dropped.
#[allow(clippy::too_many_arguments)]
fn extend_ideal<F: Field>(
    f: &F,
    q: &Quiver,
    ll: usize,
    by_pair: &[Vec<Vec<Path>>],
    index: &HashMap<Path, usize>,
    closure: &mut [Vec<Subspace<F::Elem>>],
    i: usize,
    k: usize,
    v: Vec<F::Elem>,
) {
    let mut queue = vec![(i, k, v)];
    while let Some((i, k, v)) = queue.pop() {
        if v.iter().all(|x| f.is_zero(x)) || closure[i][k].contains(f, &v) {
            continue;
        }
        let len = v.len();
        closure[i][k] = closure[i][k].sum(f, &Subspace::span(f, len, std::slice::from_ref(&v)));
        let terms: Vec<(&Path, &F::Elem)> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(c, x)| (&by_pair[i][k][c], x))
            .collect();
        for a in q.arrows_from(k) {
            let t = q.arrow(a).target;
            let mut w = vec![f.zero(); by_pair[i][t].len()];
            for (p, c) in &terms {
                if p.len() < ll {
                    w[index[&p.then(a)]] = (*c).clone();
                }
            }
            queue.push((i, t, w));
        }
        for b in q.arrows_to(i) {
            let s = q.arrow(b).source;
            let mut w = vec![f.zero(); by_pair[s][k].len()];
            for (p, c) in &terms {
                if p.len() < ll {
                    let mut arrows = vec![b];
                    arrows.extend(&p.arrows);
                    w[index[&Path { start: s, arrows }]] = (*c).clone();
                }
            }
            queue.push((s, k, w));
        }
    }
}
