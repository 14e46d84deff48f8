use std::fmt;

use serde::Serialize;

use super::checks::periodic_cycle;
use super::graph::{residue_dynamics, FunctionalGraph};
use crate::algebra::FpPoly;
use crate::dynamics::{HomogMap, ResidueMap};
use crate::error::{Error, Result};
use crate::funcfield::Place;
use crate::geometry::{reduce_point, ProjPoint};

/// Which relation between the global period n and the residue data holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MstCase {
    /// n = m
    #[serde(rename = "(i)")]
    Equal,
    /// n = m·r
    #[serde(rename = "(ii)")]
    TimesOrder,
    /// n = p^e·m·r with e ≥ 1
    #[serde(rename = "(iii)")]
    TimesPrimePower,
    #[serde(rename = "violation")]
    Violation,
}

impl fmt::Display for MstCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MstCase::Equal => "(i)",
            MstCase::TimesOrder => "(ii)",
            MstCase::TimesPrimePower => "(iii)",
            MstCase::Violation => "violation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstDecomposition {
    pub place: Place,
    /// Global minimal period.
    pub n: usize,
    /// Period of the reduced point.
    pub m: usize,
    /// `(φ̃^m)'(P̃)` in k(π).
    pub multiplier: FpPoly,
    /// Multiplicative order of the reduced multiplier; `None` stands for ∞
    /// (multiplier 0).
    pub r: Option<u64>,
    pub e: Option<u32>,
    pub case: MstCase,
}

/// Matches `n` against `m`, `m·r` and `p^e·m·r` in that order.
pub fn classify(p: u64, n: u64, m: u64, r: Option<u64>) -> (MstCase, Option<u32>) {
    if n == m {
        return (MstCase::Equal, None);
    }
    let Some(r) = r else {
        return (MstCase::Violation, None);
    };
    let mr = m * r;
    if n == mr {
        return (MstCase::TimesOrder, None);
    }
    let mut e = 0;
    let mut cur = mr;
    while cur < n {
        cur *= p;
        e += 1;
        if cur == n {
            return (MstCase::TimesPrimePower, Some(e));
        }
    }
    (MstCase::Violation, None)
}

/// Decomposes the minimal period n of P against the reduction at π.
pub fn verify_mst(map: &HomogMap, point: &ProjPoint, n: usize, place: &Place) -> Result<MstDecomposition> {
    if place.is_infinite() || !map.has_good_reduction(place) {
        return Err(Error::BadReduction(place.to_string()));
    }
    let graph = residue_dynamics(map, place)?;
    let reduced = map.reduce_map(place)?;
    verify_mst_with(map, point, n, place, &reduced, &graph)
}

/// [`verify_mst`] reusing a reduced map and its functional graph.
pub fn verify_mst_with(
    map: &HomogMap,
    point: &ProjPoint,
    n: usize,
    place: &Place,
    reduced: &ResidueMap,
    graph: &FunctionalGraph,
) -> Result<MstDecomposition> {
    periodic_cycle(map, point, n)?;
    let rp = reduce_point(point, reduced.field());
    let m = graph
        .period(&rp)
        .expect("the reduction of a periodic point is periodic");
    let multiplier = reduced.multiplier(&rp, m);
    let r = if multiplier.is_zero() {
        None
    } else {
        Some(reduced.field().mult_order(&multiplier)?)
    };
    let (case, e) = classify(map.field().p() as u64, n as u64, m as u64, r);
    Ok(MstDecomposition {
        place: place.clone(),
        n,
        m,
        multiplier,
        r,
        e,
        case,
    })
}
