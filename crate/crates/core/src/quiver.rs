//! Quivers and paths.
//!
//! Vertices are 0-based internally and 1-based in every external format
//! (JSON, `Display`, reports), matching the usual `e_1, ..., e_n` notation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    arrows: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    id: String,
    from: usize,
    to: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverJson {
    vertices: usize,
    arrows: Vec<ArrowJson>,
}

impl Quiver {
    /// Build from `(id, from, to)` triples with 1-based vertices.
    pub fn new(n: usize, arrows: &[(&str, usize, usize)]) -> Result<Quiver, Error> {
        let arrows = arrows
            .iter()
            .map(|&(id, s, t)| (id.to_string(), s, t))
            .collect::<Vec<_>>();
        Self::from_one_based(n, arrows)
    }

    fn from_one_based(n: usize, arrows: Vec<(String, usize, usize)>) -> Result<Quiver, Error> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "a quiver needs at least one vertex".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (id, s, t) in arrows {
            if id.is_empty() {
                return Err(Error::InvalidInput("arrow ids must be nonempty".into()));
            }
            if !seen.insert(id.clone()) {
                return Err(Error::InvalidInput(format!("duplicate arrow id {id:?}")));
            }
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(Error::InvalidInput(format!(
                        "arrow {id:?} uses vertex {v}, expected 1..={n}"
                    )));
                }
            }
            out.push(Arrow {
                id,
                source: s - 1,
                target: t - 1,
            });
        }
        Ok(Quiver { n, arrows: out })
    }

    pub fn from_json(s: &str) -> Result<Quiver, Error> {
        let q: QuiverJson = serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("malformed quiver JSON: {e}")))?;
        Self::from_one_based(
            q.vertices,
            q.arrows.into_iter().map(|a| (a.id, a.from, a.to)).collect(),
        )
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let q = QuiverJson {
            vertices: self.n,
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    id: a.id.clone(),
                    from: a.source + 1,
                    to: a.target + 1,
                })
                .collect(),
        };
        serde_json::to_value(q).expect("quiver serializes")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// `A[j][i]` is the number of arrows `i -> j`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut a = vec![vec![0; self.n]; self.n];
        for ar in &self.arrows {
            a[ar.target][ar.source] += 1;
        }
        a
    }

    fn digraph(&self) -> DiGraph<(), ()> {
        let mut g = DiGraph::new();
        let nodes: Vec<_> = (0..self.n).map(|_| g.add_node(())).collect();
        for a in &self.arrows {
            g.add_edge(nodes[a.source], nodes[a.target], ());
        }
        g
    }

    /// Vertices lying on an oriented cycle.
    pub fn cyclic_vertices(&self) -> Vec<bool> {
        let mut on_cycle = vec![false; self.n];
        for scc in tarjan_scc(&self.digraph()) {
            if scc.len() > 1 {
                for v in scc {
                    on_cycle[v.index()] = true;
                }
            }
        }
        for a in &self.arrows {
            if a.source == a.target {
                on_cycle[a.source] = true;
            }
        }
        on_cycle
    }

    pub fn has_oriented_cycle(&self) -> bool {
        self.cyclic_vertices().into_iter().any(|b| b)
    }

    /// Vertices from which some path reaches an oriented cycle.
    pub fn precyclic(&self) -> Vec<bool> {
        let mut pre = self.cyclic_vertices();
        // propagate backwards along arrows until stable
        let mut changed = true;
        while changed {
            changed = false;
            for a in &self.arrows {
                if pre[a.target] && !pre[a.source] {
                    pre[a.source] = true;
                    changed = true;
                }
            }
        }
        pre
    }

    /// Precyclic vertices as a 1-based set.
    pub fn precyclic_vertices(&self) -> BTreeSet<usize> {
        self.precyclic()
            .into_iter()
            .enumerate()
            .filter(|&(_, b)| b)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Length of the longest path, `None` when there is an oriented cycle.
    pub fn longest_path(&self) -> Option<usize> {
        if self.has_oriented_cycle() {
            return None;
        }
        // longest path ending at each vertex, relaxed n times (acyclic)
        let mut best = vec![0usize; self.n];
        for _ in 0..self.n {
            for a in &self.arrows {
                best[a.target] = best[a.target].max(best[a.source] + 1);
            }
        }
        Some(best.into_iter().max().unwrap_or(0))
    }

    /// The quiver on `2n` vertices with an arrow `i -> n + j` for each arrow
    /// `i -> j`. Vertex `n + j` plays the role of the hatted copy of `j`.
    pub fn separated(&self) -> Quiver {
        Quiver {
            n: 2 * self.n,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    source: a.source,
                    target: self.n + a.target,
                })
                .collect(),
        }
    }

    /// All arrows reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Connected components of the underlying undirected graph.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<usize, usize> = HashMap::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            let k = *index.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[k].push(v);
        }
        groups
    }

    /// All paths of length at most `max_length`, ordered by length, then by
    /// start vertex, then lexicographically by arrow index sequence in
    /// application order.
    pub fn enumerate_paths(&self, max_length: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.n).map(Path::lazy).collect();
        let mut frontier = out.clone();
        for _ in 0..max_length {
            let mut next = Vec::new();
            for p in &frontier {
                let end = p.end(self);
                for a in self.arrows_from(end) {
                    next.push(p.then(a));
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Label of a vertex in external notation.
    pub fn vertex_label(&self, v: usize) -> String {
        (v + 1).to_string()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({} vertices:", self.n)?;
        for a in &self.arrows {
            write!(f, " {}:{}->{}", a.id, a.source + 1, a.target + 1)?;
        }
        write!(f, ")")
    }
}

/// A path, stored in application order: `arrows[0]` is applied first.
///
/// The written form follows the right-to-left convention, so the path
/// `b` after `a` prints as `b*a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn lazy(v: usize) -> Path {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        Path {
            start: q.arrows[a].source,
            arrows: vec![a],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.start, |&a| q.arrows[a].target)
    }

    /// This path followed by arrow `a`.
    pub fn then(&self, a: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            start: self.start,
            arrows,
        }
    }

    /// `self` after `other` (`other` is applied first), if composable.
    pub fn after(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if other.end(q) != self.start {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            start: other.start,
            arrows,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", self.start + 1);
        }
        self.arrows
            .iter()
            .rev()
            .map(|&a| q.arrows[a].id.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.arrows.len(), self.start, &self.arrows).cmp(&(
            other.arrows.len(),
            other.start,
            &other.arrows,
        ))
    }
}

/// Quivers that appear in the worked examples, for tests and documentation.
pub mod examples {
    use super::Quiver;

    /// `1 <-> 2`, one arrow each way.
    pub fn two_cycle() -> Quiver {
        Quiver::new(2, &[("a", 1, 2), ("b", 2, 1)]).unwrap()
    }

    /// Oriented cycle `1 -> 2 -> ... -> n -> 1`.
    pub fn oriented_cycle(n: usize) -> Quiver {
        let ids: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
        let arrows: Vec<(&str, usize, usize)> = (1..=n)
            .map(|i| (ids[i - 1].as_str(), i, i % n + 1))
            .collect();
        Quiver::new(n, &arrows).unwrap()
    }

    /// One vertex with `r` loops.
    pub fn loops(r: usize) -> Quiver {
        let ids: Vec<String> = (0..r)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        let arrows: Vec<(&str, usize, usize)> = ids.iter().map(|s| (s.as_str(), 1, 1)).collect();
        Quiver::new(1, &arrows).unwrap()
    }

    /// `alpha: 1 -> 2` and two arrows `beta1, beta2: 2 -> 1`.
    pub fn alpha_beta_beta() -> Quiver {
        Quiver::new(2, &[("alpha", 1, 2), ("beta1", 2, 1), ("beta2", 2, 1)]).unwrap()
    }

    /// `1 -> 2, 1 -> 3`, a loop at 2, `2 -> 3 -> 4`.
    pub fn tilt_illustration() -> Quiver {
        family_q(3)
    }

    /// The family `Q^(L)`: `1 -> 2`, `1 -> 3`, loop at 2, `2 -> 3`, then a
    /// linear tail `3 -> 4 -> ... -> L+1`.
    pub fn family_q(l: usize) -> Quiver {
        assert!(l >= 3);
        let mut arrows: Vec<(String, usize, usize)> = vec![
            ("a".into(), 1, 2),
            ("b".into(), 1, 3),
            ("c".into(), 2, 2),
            ("d".into(), 2, 3),
        ];
        for v in 3..=l {
            arrows.push((format!("t{v}"), v, v + 1));
        }
        let refs: Vec<(&str, usize, usize)> = arrows
            .iter()
            .map(|(s, a, b)| (s.as_str(), *a, *b))
            .collect();
        Quiver::new(l + 1, &refs).unwrap()
    }

    /// `1 -> 2 -> 5` with the 3-cycle `2 -> 3 -> 4 -> 2`.
    pub fn ratio_example() -> Quiver {
        Quiver::new(
            5,
            &[
                ("a", 1, 2),
                ("b", 2, 3),
                ("c", 3, 4),
                ("d", 4, 2),
                ("e", 2, 5),
            ],
        )
        .unwrap()
    }

    /// Loop at 1 and `1 -> 2`.
    pub fn loop_then_arrow() -> Quiver {
        Quiver::new(2, &[("l", 1, 1), ("a", 1, 2)]).unwrap()
    }

    /// Loops at 1 and 2, both pointing into 3.
    pub fn two_loops_into_sink() -> Quiver {
        Quiver::new(3, &[("l1", 1, 1), ("a", 1, 3), ("b", 2, 3), ("l2", 2, 2)]).unwrap()
    }

    /// Loop at 1 with arrows `1 -> 2` and `1 -> 3`.
    pub fn loop_with_two_exits() -> Quiver {
        Quiver::new(3, &[("l", 1, 1), ("a", 1, 2), ("b", 1, 3)]).unwrap()
    }

    /// Loops at 1 and 2, `1 <-> 2`, and `1 -> 3`, `2 -> 3`.
    pub fn exponential_arrows() -> Quiver {
        Quiver::new(
            3,
            &[
                ("l1", 1, 1),
                ("l2", 2, 2),
                ("a", 1, 2),
                ("b", 2, 1),
                ("c", 1, 3),
                ("d", 2, 3),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn precyclic_of_tilt_illustration() {
        let q = tilt_illustration();
        assert_eq!(q.precyclic_vertices(), [1, 2].into_iter().collect());
        let acyclic = Quiver::new(3, &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        assert!(acyclic.precyclic_vertices().is_empty());
        assert_eq!(loops(1).precyclic_vertices(), [1].into_iter().collect());
    }

    #[test]
    fn path_counts() {
        let q = Quiver::new(3, &[("a", 1, 2)]).unwrap();
        assert_eq!(q.enumerate_paths(0).len(), 3);
        assert_eq!(two_cycle().enumerate_paths(2).len(), 6);
        assert_eq!(loops(2).enumerate_paths(2).len(), 7);
    }

    #[test]
    fn separated_quiver_shapes() {
        let s = loop_then_arrow().separated();
        assert_eq!(s.num_vertices(), 4);
        let edges: Vec<_> = s.arrows().iter().map(|a| (a.source, a.target)).collect();
        assert_eq!(edges, vec![(0, 2), (0, 3)]);
        let mut comps = s.connected_components();
        comps.sort_by_key(|c| c.len());
        assert_eq!(comps, vec![vec![1], vec![0, 2, 3]]);
        let bare = Quiver::new(3, &[]).unwrap().separated();
        assert_eq!(bare.connected_components().len(), 6);
    }

    #[test]
    fn longest_paths() {
        let a3 = Quiver::new(3, &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        assert_eq!(a3.longest_path(), Some(2));
        assert_eq!(Quiver::new(2, &[]).unwrap().longest_path(), Some(0));
        assert_eq!(two_cycle().longest_path(), None);
    }

    #[test]
    fn json_round_trip_and_errors() {
        let q = alpha_beta_beta();
        let s = q.to_json_value().to_string();
        assert_eq!(Quiver::from_json(&s).unwrap(), q);
        assert!(
            Quiver::from_json(r#"{"vertices":1,"arrows":[{"id":"a","from":1,"to":2}]}"#).is_err()
        );
        assert!(Quiver::from_json(
            r#"{"vertices":2,"arrows":[{"id":"a","from":1,"to":2},{"id":"a","from":2,"to":1}]}"#
        )
        .is_err());
        assert!(Quiver::from_json("not json").is_err());
    }

    #[test]
    fn path_display_is_right_to_left() {
        let q = tilt_illustration();
        let p = Path::arrow(&q, 0).then(2).then(3);
        assert_eq!(p.display(&q), "d*c*a");
        assert_eq!(p.end(&q), 2);
    }
}
