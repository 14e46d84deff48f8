//! Executable checkers for the distance inequalities and equalities along
//! orbits. Each returns a [`Verdict`] carrying a witness on failure.

use std::collections::BTreeSet;

use serde::Serialize;

use super::orbit::minimal_period;
use crate::algebra::irreducible_support;
use crate::dynamics::{HomogMap, Mobius};
use crate::error::{Error, Result};
use crate::funcfield::Place;
use crate::geometry::{cross_product, log_distance, ProjPoint};

/// Where a check failed: the place, the indices involved and the distance
/// values that disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub place: String,
    pub indices: Vec<i64>,
    pub values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(place: &Place, indices: Vec<i64>, values: Vec<i64>) -> Self {
        Verdict {
            holds: false,
            witness: Some(Witness {
                place: place.to_string(),
                indices,
                values,
            }),
        }
    }
}

/// Serialized checker outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub instance: String,
    pub checker: String,
    pub result: bool,
    pub witness: Option<Witness>,
}

impl CheckRecord {
    pub fn new(instance: impl Into<String>, checker: impl Into<String>, verdict: Verdict) -> Self {
        CheckRecord {
            instance: instance.into(),
            checker: checker.into(),
            result: verdict.holds,
            witness: verdict.witness,
        }
    }
}

fn require_good_reduction(map: &HomogMap, place: &Place) -> Result<()> {
    if place.is_infinite() || !map.has_good_reduction(place) {
        return Err(Error::BadReduction(place.to_string()));
    }
    Ok(())
}

fn require_distinct(points: &[&ProjPoint]) -> Result<()> {
    let set: BTreeSet<_> = points.iter().collect();
    if set.len() != points.len() {
        return Err(Error::DuplicatePoints);
    }
    Ok(())
}

/// Finite places at which some pair of the points has positive distance,
/// i.e. the monic irreducible factors of all cross products.
pub fn joint_support(points: &[ProjPoint]) -> Result<Vec<Place>> {
    let mut support = BTreeSet::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let c = cross_product(a, b);
            if c.is_zero() {
                return Err(Error::DuplicatePoints);
            }
            if !c.is_unit() {
                support.extend(irreducible_support(&c)?);
            }
        }
    }
    Ok(support.into_iter().map(Place::Finite).collect())
}

/// `δ_v(P₁, P₃) ≥ min{δ_v(P₁, P₂), δ_v(P₂, P₃)}`.
pub fn check_prop_51(p1: &ProjPoint, p2: &ProjPoint, p3: &ProjPoint, place: &Place) -> Result<Verdict> {
    require_distinct(&[p1, p2, p3])?;
    let d13 = log_distance(p1, p3, place)?;
    let d12 = log_distance(p1, p2, place)?;
    let d23 = log_distance(p2, p3, place)?;
    Ok(if d13 >= d12.min(d23) {
        Verdict::pass()
    } else {
        Verdict::fail(place, vec![1, 2, 3], vec![d13, d12, d23])
    })
}

/// `(δ_π(P, Q), δ_π(φ(P), φ(Q)))` with no precondition on the place.
pub fn prop_52_distances(map: &HomogMap, p: &ProjPoint, q: &ProjPoint, place: &Place) -> Result<(i64, i64)> {
    if p == q {
        return Err(Error::EqualPoints);
    }
    let (fp, fq) = (map.evaluate(p), map.evaluate(q));
    if fp == fq {
        return Err(Error::CollidingImages);
    }
    Ok((log_distance(p, q, place)?, log_distance(&fp, &fq, place)?))
}

/// `δ_π(φ(P), φ(Q)) ≥ δ_π(P, Q)` at a place of good reduction.
pub fn check_prop_52(map: &HomogMap, p: &ProjPoint, q: &ProjPoint, place: &Place) -> Result<Verdict> {
    require_good_reduction(map, place)?;
    let (before, after) = prop_52_distances(map, p, q, place)?;
    Ok(if after >= before {
        Verdict::pass()
    } else {
        Verdict::fail(place, vec![0, 1], vec![before, after])
    })
}

/// The cycle `P, φ(P), ..., φ^{n-1}(P)` after checking that n is the
/// minimal period.
pub fn periodic_cycle(map: &HomogMap, point: &ProjPoint, n: usize) -> Result<Vec<ProjPoint>> {
    if n == 0 || minimal_period(map, point, n) != Some(n) {
        return Err(Error::NotPeriodic(format!("{point} with period {n}")));
    }
    let mut cycle = vec![point.clone()];
    for _ in 1..n {
        cycle.push(map.evaluate(cycle.last().expect("nonempty")));
    }
    Ok(cycle)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Distances along a cycle of minimal period n, at every finite place of
/// good reduction where some pair collides:
///
/// * `δ(φⁱP, φʲP) = δ(φ^{i+k}P, φ^{j+k}P)` for all i, j, k, indices mod n;
/// * `δ(φⁱP, φʲP) = δ(φP, P)` whenever `gcd(i − j, n) = 1`.
///
/// At every other finite place all these distances are 0.
pub fn check_prop_61(map: &HomogMap, point: &ProjPoint, n: usize) -> Result<Verdict> {
    let cycle = periodic_cycle(map, point, n)?;
    if n == 1 {
        return Ok(Verdict::pass());
    }
    for place in joint_support(&cycle)? {
        if !map.has_good_reduction(&place) {
            continue;
        }
        let mut dist = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    dist[i][j] = log_distance(&cycle[i], &cycle[j], &place)?;
                }
            }
        }
        let base = dist[1][0];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for k in 1..n {
                    let (ik, jk) = ((i + k) % n, (j + k) % n);
                    if dist[i][j] != dist[ik][jk] {
                        return Ok(Verdict::fail(
                            &place,
                            vec![i as i64, j as i64, k as i64],
                            vec![dist[i][j], dist[ik][jk]],
                        ));
                    }
                }
                let diff = (i + n - j) % n;
                if gcd(diff, n) == 1 && dist[i][j] != base {
                    return Ok(Verdict::fail(&place, vec![i as i64, j as i64], vec![dist[i][j], base]));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Checks a chain `P_{-m+1}, ..., P_0` ending in a point fixed by `ψ = φ^power`,
/// with consecutive entries related by ψ. Indices in witnesses are the a, b
/// of `P_{-a}`, `P_{-b}`.
///
/// * `δ(P_{-b}, P_0) ≤ δ(P_{-a}, P_0)` for `0 < a < b`;
/// * `δ(P_{-b}, P_{-a}) = δ(P_{-b}, P_0)` for `0 < a < b`.
pub fn check_lemma_pab_power(map: &HomogMap, power: usize, orbit: &[ProjPoint], place: &Place) -> Result<Verdict> {
    require_good_reduction(map, place)?;
    let psi = |q: &ProjPoint| map.iterate(q, power);
    let Some(p0) = orbit.last() else {
        return Err(Error::OrbitMismatch("empty orbit".into()));
    };
    if power == 0 || &psi(p0) != p0 {
        return Err(Error::OrbitMismatch(format!("{p0} is not fixed")));
    }
    for (i, w) in orbit.windows(2).enumerate() {
        if psi(&w[0]) != w[1] {
            return Err(Error::OrbitMismatch(format!("step {i} does not follow the map")));
        }
    }
    require_distinct(&orbit.iter().collect::<Vec<_>>())?;
    let m = orbit.len();
    let at = |a: usize| &orbit[m - 1 - a];
    let to_p0: Vec<i64> = (1..m).map(|a| log_distance(at(a), p0, place)).collect::<Result<_>>()?;
    for b in 2..m {
        for a in 1..b {
            let (da, db) = (to_p0[a - 1], to_p0[b - 1]);
            if db > da {
                return Ok(Verdict::fail(place, vec![a as i64, b as i64], vec![db, da]));
            }
            let dba = log_distance(at(b), at(a), place)?;
            if dba != db {
                return Ok(Verdict::fail(place, vec![a as i64, b as i64], vec![dba, db]));
            }
        }
    }
    Ok(Verdict::pass())
}

/// [`check_lemma_pab_power`] for φ itself.
pub fn check_lemma_pab(map: &HomogMap, orbit: &[ProjPoint], place: &Place) -> Result<Verdict> {
    check_lemma_pab_power(map, 1, orbit, place)
}

/// The same check after conjugating so that the terminal point is [0 : 1].
/// Conjugation by a unit-determinant matrix preserves all finite distances.
pub fn check_lemma_pab_normalized(map: &HomogMap, power: usize, orbit: &[ProjPoint], place: &Place) -> Result<Verdict> {
    let Some(p0) = orbit.last() else {
        return Err(Error::OrbitMismatch("empty orbit".into()));
    };
    let m = Mobius::sending_zero_to(p0);
    let inv = m.inverse();
    let conj = map.conjugate(&m)?;
    let moved: Vec<ProjPoint> = orbit.iter().map(|q| inv.apply(q)).collect();
    check_lemma_pab_power(&conj, power, &moved, place)
}

/// The outcome of the equal-distance count bound with |S| = 1, D = 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualDistances {
    /// `δ_π(P₀, P₁) = δ_π(P_i, P_j)` for all distinct i, j and every finite π.
    pub hypothesis: bool,
    /// The hypothesis implies `count ≤ p²`.
    pub bound_ok: bool,
    pub witness: Option<Witness>,
}

pub fn check_lemma_equal_distances(points: &[ProjPoint], p: u64) -> Result<EqualDistances> {
    require_distinct(&points.iter().collect::<Vec<_>>())?;
    let mut witness = None;
    if points.len() >= 2 {
        'places: for place in joint_support(points)? {
            let base = log_distance(&points[0], &points[1], &place)?;
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    let d = log_distance(&points[i], &points[j], &place)?;
                    if d != base {
                        witness = Some(Witness {
                            place: place.to_string(),
                            indices: vec![i as i64, j as i64],
                            values: vec![d, base],
                        });
                        break 'places;
                    }
                }
            }
        }
    }
    let hypothesis = witness.is_none();
    Ok(EqualDistances {
        hypothesis,
        bound_ok: !hypothesis || (points.len() as u64) <= p * p,
        witness,
    })
}
