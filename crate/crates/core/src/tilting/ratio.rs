use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::{strong_tilting_module, BasicAlgebra};
use crate::algebra::TruncatedAlgebra;
use crate::linalg::Rationals;
use crate::quiver::Quiver;
use crate::Error;

/// `LL(Λ̃_L)`, computed over the rationals.
pub fn tilted_loewy_length(q: Arc<Quiver>, l: usize) -> Result<usize, Error> {
    let t = strong_tilting_module(Rationals::default(), q, l)?;
    Ok(BasicAlgebra::new(t.summands)?.radical()?.loewy_length)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioEntry {
    #[serde(rename = "L")]
    pub l: usize,
    pub loewy_length: usize,
    pub tilted_loewy_length: usize,
    #[serde(serialize_with = "ratio_string")]
    pub ratio: Ratio<usize>,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<usize>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// `LL(Λ̃_L) / LL(Λ_L)` for `L` in `l_min..=l_max`, one `L` per task.
pub fn loewy_ratio_sequence(
    q: &Arc<Quiver>,
    l_min: usize,
    l_max: usize,
) -> Result<Vec<RatioEntry>, Error> {
    if l_min == 0 || l_max < l_min {
        return Err(Error::InvalidInput(format!("bad range {l_min}..{l_max}")));
    }
    (l_min..=l_max)
        .into_par_iter()
        .map(|l| {
            let ll = TruncatedAlgebra::from_arc(Rationals::default(), q.clone(), l)?.loewy_length();
            let tl = tilted_loewy_length(q.clone(), l)?;
            Ok(RatioEntry {
                l,
                loewy_length: ll,
                tilted_loewy_length: tl,
                ratio: Ratio::new(tl, ll),
            })
        })
        .collect()
}

/// Limits of the ratio along residue classes, read off an eventually
/// periodic pattern in the computed window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Accumulation {
    #[serde(serialize_with = "ratio_strings")]
    pub points: BTreeSet<Ratio<usize>>,
    pub period: usize,
    /// First `L` from which the pattern holds.
    pub start: usize,
    pub window: (usize, usize),
}

fn ratio_strings<S: serde::Serializer>(
    r: &BTreeSet<Ratio<usize>>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(r.iter().map(|x| x.to_string()))
}

/// Number of trailing differences that must agree in every residue class.
const MIN_DIFFS: usize = 3;

/// Looks for the least period `p <= max_period` such that, along each
/// residue class mod `p`, both Loewy lengths grow by constant steps over
/// at least the last three steps. Returns `None` if no period fits.
pub fn accumulation_estimate(entries: &[RatioEntry], max_period: usize) -> Option<Accumulation> {
    let window = (entries.first()?.l, entries.last()?.l);
    for p in 1..=max_period {
        let mut points = BTreeSet::new();
        let mut start = window.0;
        let mut ok = true;
        for r in 0..p {
            let class: Vec<&RatioEntry> = entries.iter().skip(r).step_by(p).collect();
            if class.len() < MIN_DIFFS + 1 {
                ok = false;
                break;
            }
            let step = |e: &[&RatioEntry]| {
                (
                    e[1].tilted_loewy_length as i64 - e[0].tilted_loewy_length as i64,
                    e[1].loewy_length as i64 - e[0].loewy_length as i64,
                )
            };
            let diffs: Vec<(i64, i64)> = class.windows(2).map(step).collect();
            let last = *diffs.last().unwrap();
            let run = diffs.iter().rev().take_while(|&&d| d == last).count();
            if run < MIN_DIFFS {
                ok = false;
                break;
            }
            start = start.max(class[class.len() - 1 - run].l);
            let (dt, dl) = last;
            let point = if dl > 0 && dt >= 0 {
                Ratio::new(dt as usize, dl as usize)
            } else if dl == 0 && dt == 0 {
                class.last().unwrap().ratio
            } else {
                ok = false;
                break;
            };
            points.insert(point);
        }
        if ok {
            return Some(Accumulation {
                points,
                period: p,
                start,
                window,
            });
        }
    }
    None
}
