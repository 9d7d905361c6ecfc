use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Representation;
use crate::linalg::{Field, FieldSpec, Matrix};
use crate::quiver::Quiver;
use crate::Error;

/// Exchange format: dimension vector plus dense arrow matrices with entries
/// written as exact strings such as `"3/7"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub field: FieldSpec,
    #[serde(rename = "L")]
    pub l: usize,
    pub dims: Vec<usize>,
    /// Arrow id to row-major matrix.
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

impl<F: Field> Representation<F> {
    pub fn to_json(&self) -> RepresentationJson {
        let maps = self
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let m = self.map(k);
                let rows = (0..m.rows())
                    .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
                    .collect();
                (a.id.clone(), rows)
            })
            .collect();
        RepresentationJson {
            field: self.field().spec(),
            l: self.l(),
            dims: self.dims().to_vec(),
            maps,
        }
    }

    pub fn from_json(field: F, quiver: Arc<Quiver>, j: &RepresentationJson) -> Result<Self, Error> {
        if j.field != field.spec() {
            return Err(Error::InvalidInput(format!(
                "representation is over {}, expected {}",
                j.field,
                field.spec()
            )));
        }
        if j.dims.len() != quiver.num_vertices() {
            return Err(Error::InvalidInput(
                "dimension vector length mismatch".into(),
            ));
        }
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        for a in quiver.arrows() {
            let rows = j
                .maps
                .get(&a.id)
                .ok_or_else(|| Error::InvalidInput(format!("missing matrix for arrow {}", a.id)))?;
            let (r, c) = (j.dims[a.target], j.dims[a.source]);
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::InvalidInput(format!(
                    "matrix for arrow {} must be {r}x{c}",
                    a.id
                )));
            }
            let data = rows
                .iter()
                .flatten()
                .map(|s| field.parse(s))
                .collect::<Result<Vec<_>, _>>()?;
            maps.push(Matrix::from_vec(r, c, data));
        }
        if j.maps.len() != quiver.arrows().len() {
            return Err(Error::InvalidInput(
                "matrices given for unknown arrows".into(),
            ));
        }
        Representation::new(field, quiver, j.l, j.dims.clone(), maps)
    }
}
