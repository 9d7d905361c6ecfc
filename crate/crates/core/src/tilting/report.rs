use std::sync::Arc;

use serde::Serialize;

use super::{strong_tilting_module, tilt_presentation, BasicAlgebra, Presentation};
use crate::algebra::TruncatedAlgebra;
use crate::linalg::Rationals;
use crate::quiver::Quiver;
use crate::ssq::SemisimpleSequence;
use crate::Error;

#[derive(Debug, Clone, Serialize)]
pub struct SummandReport {
    /// 1-based vertex `i` of `T_i`.
    pub vertex: usize,
    pub dims: Vec<usize>,
    pub radical_layering: SemisimpleSequence,
    pub tree: bool,
    pub dot: String,
}

/// Everything computed for one `(Q, L)`, over the rationals.
#[derive(Debug, Clone, Serialize)]
pub struct TiltReport {
    #[serde(rename = "L")]
    pub l: usize,
    /// 1-based non-precyclic vertices.
    pub epsilon: Vec<usize>,
    pub projective_dimension: usize,
    pub summands: Vec<SummandReport>,
    /// `hom_dimensions[i][j] = dim Hom(T_i, T_j)`.
    pub hom_dimensions: Vec<Vec<usize>>,
    pub tilt_quiver: serde_json::Value,
    pub loewy_length: usize,
    pub tilted_loewy_length: usize,
    pub vertex_loewy_lengths: Vec<usize>,
    pub presentation: Option<Presentation>,
    /// Why the presentation is missing, if it is.
    pub presentation_note: Option<String>,
}

pub fn tilt_report(q: Arc<Quiver>, l: usize) -> Result<TiltReport, Error> {
    let field = Rationals::default();
    let ll = TruncatedAlgebra::from_arc(field.clone(), q.clone(), l)?.loewy_length();
    let t = strong_tilting_module(field, q, l)?;
    let summands = t
        .summands
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let g = m.layered_graph();
            SummandReport {
                vertex: i + 1,
                dims: m.dims().to_vec(),
                radical_layering: m.radical_layering(),
                tree: g.is_tree(),
                dot: g.to_dot(&format!("T{}", i + 1)),
            }
        })
        .collect();
    let e = BasicAlgebra::new(t.summands)?;
    let n = e.num_idempotents();
    let rad = e.radical()?;
    let (presentation, presentation_note) = match tilt_presentation(&e, &rad) {
        Ok(p) => (Some(p), None),
        Err(Error::Unsupported(msg)) => (None, Some(msg)),
        Err(other) => return Err(other),
    };
    Ok(TiltReport {
        l,
        epsilon: t.epsilon.vertices.iter().map(|v| v + 1).collect(),
        projective_dimension: t.projective_dimension,
        summands,
        hom_dimensions: (0..n)
            .map(|i| (0..n).map(|j| e.block_dim(i, j)).collect())
            .collect(),
        tilt_quiver: rad.quiver().to_json_value(),
        loewy_length: ll,
        tilted_loewy_length: rad.loewy_length,
        vertex_loewy_lengths: rad.vertex_loewy_lengths,
        presentation,
        presentation_note,
    })
}
