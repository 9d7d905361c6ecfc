use std::fmt::Write as _;

use serde::Serialize;

use super::Representation;
use crate::linalg::{Field, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphNode {
    pub id: usize,
    /// Radical layer, 0 for the top.
    pub layer: usize,
    /// 1-based vertex label.
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub arrow: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayeredGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    /// Every arrow sends every basis vector to a multiple of a single basis
    /// vector (or to zero).
    pub exact: bool,
}

impl<F: Field> Representation<F> {
    /// Choose a basis adapted to the radical filtration, preferring arrow
    /// images of earlier basis vectors, and read off the graph.
    pub fn layered_graph(&self) -> LayeredGraph {
        let f = self.field();
        let q = self.quiver();
        let n = q.num_vertices();
        let series = self.radical_series();
        // (vertex, layer, vector)
        let mut chosen: Vec<(usize, usize, Vec<F::Elem>)> = Vec::new();
        for k in 0..self.l() {
            let mut span: Vec<Subspace<F::Elem>> = series[k + 1].clone();
            let mut candidates: Vec<(usize, Vec<F::Elem>)> = Vec::new();
            for (v, _, x) in &chosen {
                for a in q.arrows_from(*v) {
                    candidates.push((q.arrow(a).target, self.act(a, x)));
                }
            }
            for (v, x) in candidates {
                if series[k][v].contains(f, &x) && !span[v].contains(f, &x) {
                    span[v] = span[v].sum(f, &Subspace::span(f, x.len(), std::slice::from_ref(&x)));
                    chosen.push((v, k, x));
                }
            }
            for v in 0..n {
                for x in series[k][v].basis() {
                    if !span[v].contains(f, x) {
                        span[v] =
                            span[v].sum(f, &Subspace::span(f, x.len(), std::slice::from_ref(x)));
                        chosen.push((v, k, x.clone()));
                    }
                }
            }
        }
        // node order: by layer, then vertex, then choice order
        let mut order: Vec<usize> = (0..chosen.len()).collect();
        order.sort_by_key(|&i| (chosen[i].1, chosen[i].0, i));
        let mut per_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut nodes = Vec::with_capacity(chosen.len());
        for (id, &i) in order.iter().enumerate() {
            let (v, layer, _) = &chosen[i];
            per_vertex[*v].push(id);
            nodes.push(GraphNode {
                id,
                layer: *layer,
                vertex: v + 1,
            });
        }
        let g: Vec<Matrix<F::Elem>> = (0..n)
            .map(|v| {
                let cols: Vec<Vec<F::Elem>> = order
                    .iter()
                    .filter(|&&i| chosen[i].0 == v)
                    .map(|&i| chosen[i].2.clone())
                    .collect();
                Matrix::from_columns(self.dim(v), &cols)
            })
            .collect();
        let adapted = self.change_basis(&g).expect("adapted basis is a basis");
        let mut edges = Vec::new();
        let mut exact = true;
        for (k, a) in q.arrows().iter().enumerate() {
            let m = adapted.map(k);
            for c in 0..m.cols() {
                let nz: Vec<usize> = (0..m.rows()).filter(|&r| !f.is_zero(m.get(r, c))).collect();
                match nz.len() {
                    0 => {}
                    1 => edges.push(GraphEdge {
                        from: per_vertex[a.source][c],
                        to: per_vertex[a.target][nz[0]],
                        arrow: a.id.clone(),
                    }),
                    _ => exact = false,
                }
            }
        }
        edges.sort_by(|x, y| (x.from, x.to, &x.arrow).cmp(&(y.from, y.to, &y.arrow)));
        LayeredGraph {
            nodes,
            edges,
            exact,
        }
    }
}

impl LayeredGraph {
    /// An exact graph whose underlying undirected graph is a tree.
    pub fn is_tree(&self) -> bool {
        if !self.exact || self.nodes.is_empty() {
            return false;
        }
        let mut g = petgraph::graph::UnGraph::<(), ()>::new_undirected();
        let ids: Vec<_> = self.nodes.iter().map(|_| g.add_node(())).collect();
        for e in &self.edges {
            g.add_edge(ids[e.from], ids[e.to], ());
        }
        self.edges.len() + 1 == self.nodes.len() && petgraph::algo::connected_components(&g) == 1
    }

    /// Graphviz source with one rank per radical layer.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  node [shape=plaintext];");
        if !self.exact {
            let _ = writeln!(
                s,
                "  // not a tree graph: some arrow images are not single basis vectors"
            );
        }
        let max_layer = self.nodes.iter().map(|n| n.layer).max();
        if let Some(m) = max_layer {
            for layer in 0..=m {
                let ids: Vec<String> = self
                    .nodes
                    .iter()
                    .filter(|n| n.layer == layer)
                    .map(|n| format!("n{}", n.id))
                    .collect();
                if !ids.is_empty() {
                    let _ = writeln!(s, "  {{ rank=same; {}; }}", ids.join("; "));
                }
            }
        }
        for n in &self.nodes {
            let _ = writeln!(s, "  n{} [label=\"{}\"];", n.id, n.vertex);
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.arrow);
        }
        s.push_str("}\n");
        s
    }

    /// Nodes per layer as vertex labels, e.g. `[[1], [2], [2]]`.
    pub fn layer_labels(&self) -> Vec<Vec<usize>> {
        let depth = self.nodes.iter().map(|n| n.layer + 1).max().unwrap_or(0);
        let mut out = vec![Vec::new(); depth];
        for n in &self.nodes {
            out[n.layer].push(n.vertex);
        }
        out
    }
}
