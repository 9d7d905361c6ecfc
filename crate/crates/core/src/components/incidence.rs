//! Containment of `rep S` in `Filt S'` by a rank computation.
//!
//! Fix an `S`-flag `E` and an `S'`-flag `F` in relative position `w` (one
//! contingency table per vertex). Representations that shift both flags down
//! form a coordinate subspace `U_w`, and `GL_d · U_w` is the set of modules
//! with an `S`-flag and an `S'`-flag in position `w`. Its dimension is the
//! rank of the differential of `(g, u) -> g u g^{-1}` at a general point,
//! i.e. `dim(U_w + [gl_d, x])` for general `x ∈ U_w`. Then
//! `rep S ⊆ Filt S'` iff some `w` reaches `dim Filt S`.

use rand::Rng;

use crate::linalg::{Field, Matrix};
use crate::quiver::Quiver;
use crate::ssq::SemisimpleSequence;

/// Relative position of two flags: for every vertex, a table whose entry
/// `(l, m)` counts basis vectors in layer `l` of the first flag and layer `m`
/// of the second.
pub type RelativePosition = Vec<Vec<Vec<usize>>>;

/// Nonnegative integer matrices with the given row and column sums.
pub(crate) fn contingency_tables(rows: &[usize], cols: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn fill(
        r: usize,
        c: usize,
        row_left: &mut Vec<usize>,
        col_left: &mut Vec<usize>,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let (nr, nc) = (row_left.len(), col_left.len());
        if r == nr {
            if col_left.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        if c == nc - 1 {
            // last column takes whatever is left in the row
            let x = row_left[r];
            if x > col_left[c] {
                return;
            }
            cur[r][c] = x;
            col_left[c] -= x;
            row_left[r] = 0;
            fill(r + 1, 0, row_left, col_left, cur, out);
            row_left[r] = x;
            col_left[c] += x;
            cur[r][c] = 0;
            return;
        }
        let max = row_left[r].min(col_left[c]);
        for x in 0..=max {
            cur[r][c] = x;
            row_left[r] -= x;
            col_left[c] -= x;
            fill(r, c + 1, row_left, col_left, cur, out);
            row_left[r] += x;
            col_left[c] += x;
        }
        cur[r][c] = 0;
    }
    let mut out = Vec::new();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return out;
    }
    if cols.is_empty() {
        if rows.iter().all(|&x| x == 0) {
            out.push(vec![Vec::new(); rows.len()]);
        }
        return out;
    }
    let mut cur = vec![vec![0; cols.len()]; rows.len()];
    fill(
        0,
        0,
        &mut rows.to_vec(),
        &mut cols.to_vec(),
        &mut cur,
        &mut out,
    );
    out
}

/// Basis vectors of one vertex labelled by (layer in E, layer in F).
fn cells(table: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (l, row) in table.iter().enumerate() {
        for (m, &k) in row.iter().enumerate() {
            out.extend(std::iter::repeat_n((l, m), k));
        }
    }
    out
}

/// `dim(U_w + [gl_d, x])`, maximized over `samples` random `x ∈ U_w`, with
/// an early exit once `stop_at` is reached.
fn orbit_dimension<F: Field, R: Rng>(
    q: &Quiver,
    labels: &[Vec<(usize, usize)>],
    f: &F,
    rng: &mut R,
    samples: usize,
    stop_at: usize,
) -> usize {
    let allowed = |a: usize, r: usize, c: usize| {
        let arrow = q.arrow(a);
        let (lt, mt) = labels[arrow.target][r];
        let (ls, ms) = labels[arrow.source][c];
        lt > ls && mt > ms
    };
    let dims: Vec<usize> = labels.iter().map(|v| v.len()).collect();
    let mut free = 0;
    // coordinates outside U_w, indexed per arrow entry
    let mut outside: Vec<Vec<Option<usize>>> = Vec::with_capacity(q.arrows().len());
    let mut n_out = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (rt, cs) = (dims[a.target], dims[a.source]);
        let mut idx = vec![None; rt * cs];
        for r in 0..rt {
            for c in 0..cs {
                if allowed(k, r, c) {
                    free += 1;
                } else {
                    idx[r * cs + c] = Some(n_out);
                    n_out += 1;
                }
            }
        }
        outside.push(idx);
    }
    if n_out == 0 {
        return free;
    }
    let gl: usize = dims.iter().map(|d| d * d).sum();
    let mut best = 0;
    for _ in 0..samples.max(1) {
        let x: Vec<Matrix<F::Elem>> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (rt, cs) = (dims[a.target], dims[a.source]);
                let mut m = Matrix::zeros(f, rt, cs);
                for r in 0..rt {
                    for c in 0..cs {
                        if allowed(k, r, c) {
                            m.set(r, c, f.random(rng));
                        }
                    }
                }
                m
            })
            .collect();
        // column for each elementary ξ = E_rc at vertex v
        let mut mat = Matrix::zeros(f, n_out, gl);
        let mut col = 0;
        for v in 0..dims.len() {
            for r in 0..dims[v] {
                for c in 0..dims[v] {
                    for (k, a) in q.arrows().iter().enumerate() {
                        let cs = dims[a.source];
                        // E_rc x_a: row r of the result is row c of x_a
                        if a.target == v {
                            for j in 0..cs {
                                let e = x[k].get(c, j);
                                if let Some(i) = outside[k][r * cs + j] {
                                    let s = f.add(mat.get(i, col), e);
                                    mat.set(i, col, s);
                                }
                            }
                        }
                        // - x_a E_rc: column c of the result is column r of x_a
                        if a.source == v {
                            for i in 0..dims[a.target] {
                                let e = x[k].get(i, r);
                                if let Some(o) = outside[k][i * cs + c] {
                                    let s = f.sub(mat.get(o, col), e);
                                    mat.set(o, col, s);
                                }
                            }
                        }
                    }
                    col += 1;
                }
            }
        }
        best = best.max(free + mat.rank(f));
        if best >= stop_at {
            break;
        }
    }
    best
}

fn diagonal(s: &SemisimpleSequence, v: usize) -> Vec<Vec<usize>> {
    let l = s.len();
    let mut t = vec![vec![0; l]; l];
    for (k, row) in t.iter_mut().enumerate() {
        row[k] = s.layer(k)[v];
    }
    t
}

/// `dim Filt S`, the closure of `rep S` when `S` is realizable.
pub(crate) fn filt_dimension<F: Field, R: Rng>(
    q: &Quiver,
    s: &SemisimpleSequence,
    f: &F,
    rng: &mut R,
    samples: usize,
) -> usize {
    let labels: Vec<_> = (0..q.num_vertices())
        .map(|v| cells(&diagonal(s, v)))
        .collect();
    orbit_dimension(q, &labels, f, rng, samples, usize::MAX)
}

/// Search for a relative position `w` whose stratum is dense in `Filt S`.
/// A position found this way is a certificate: the rank at any point bounds
/// the dimension of the image from below. Absence is only established with
/// high probability.
pub(crate) fn find_dense_position<F: Field, R: Rng>(
    q: &Quiver,
    s: &SemisimpleSequence,
    t: &SemisimpleSequence,
    f: &F,
    rng: &mut R,
    samples: usize,
) -> Option<RelativePosition> {
    let target = filt_dimension(q, s, f, rng, samples * 2);
    let n = q.num_vertices();
    let per_vertex: Vec<Vec<Vec<Vec<usize>>>> = (0..n)
        .map(|v| {
            let rows: Vec<usize> = s.layers().iter().map(|l| l[v]).collect();
            let cols: Vec<usize> = t.layers().iter().map(|l| l[v]).collect();
            contingency_tables(&rows, &cols)
        })
        .collect();
    if per_vertex.iter().any(|t| t.is_empty()) {
        return None;
    }
    let gl: usize = (0..n).map(|v| s.total()[v] * s.total()[v]).sum();
    let mut choice = vec![0usize; n];
    loop {
        let w: RelativePosition = (0..n).map(|v| per_vertex[v][choice[v]].clone()).collect();
        let labels: Vec<_> = w.iter().map(|t| cells(t)).collect();
        if free_bound(q, &labels) + gl >= target
            && orbit_dimension(q, &labels, f, rng, samples, target) >= target
        {
            return Some(w);
        }
        // odometer over the product of per-vertex tables
        let mut v = n;
        loop {
            if v == 0 {
                return None;
            }
            v -= 1;
            choice[v] += 1;
            if choice[v] < per_vertex[v].len() {
                break;
            }
            choice[v] = 0;
        }
    }
}

/// `dim U_w`, a cheap upper bound ingredient.
fn free_bound(q: &Quiver, labels: &[Vec<(usize, usize)>]) -> usize {
    q.arrows()
        .iter()
        .map(|a| {
            let mut k = 0;
            for &(lt, mt) in &labels[a.target] {
                for &(ls, ms) in &labels[a.source] {
                    if lt > ls && mt > ms {
                        k += 1;
                    }
                }
            }
            k
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_counts() {
        // permutation matrices
        assert_eq!(contingency_tables(&[1, 1, 1], &[1, 1, 1]).len(), 6);
        // 2x2 tables with margins (2,1),(1,2): a in {0,1}
        assert_eq!(contingency_tables(&[2, 1], &[1, 2]).len(), 2);
        assert_eq!(contingency_tables(&[0, 0], &[0]).len(), 1);
        assert!(contingency_tables(&[1], &[2]).is_empty());
    }
}
