use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::OrbitCache;
use super::generate::{gen_map, map_rng, random_poly, MapFamily, MapGenSpec};
use crate::algebra::{enumerate_monic_irreducibles, PrimeField};
use crate::dynamics::HomogMap;
use crate::error::{Error, Result};
use crate::funcfield::Place;
use crate::geometry::{enumerate_points, Height, ProjPoint};
use crate::orbits::{
    check_lemma_equal_distances, check_lemma_pab_normalized, check_lemma_pab_power, check_prop_51, check_prop_52,
    check_prop_61, default_max_height, default_max_steps, joint_support, verify_mst_with, FunctionalGraph, MstCase,
    OrbitStatus, Verdict, Witness,
};

/// Periodic and orbit-size thresholds as functions of p:
/// (3, 9) for p = 2, (72, 288) for p = 3, otherwise
/// ((p²−1)p, (p+1)(p²−1)p).
pub fn bound_thresholds(p: u64) -> (u64, u64) {
    match p {
        2 => (3, 9),
        3 => (72, 288),
        _ => {
            let n = (p * p - 1) * p;
            (n, (p + 1) * n)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Checker {
    Ultrametric,
    Contraction,
    CycleShift,
    PeriodDecomposition,
    TailDistances,
    EqualDistances,
}

impl Checker {
    pub const ALL: [Checker; 6] = [
        Checker::Ultrametric,
        Checker::Contraction,
        Checker::CycleShift,
        Checker::PeriodDecomposition,
        Checker::TailDistances,
        Checker::EqualDistances,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Checker::Ultrametric => "ultrametric",
            Checker::Contraction => "contraction",
            Checker::CycleShift => "cycle_shift",
            Checker::PeriodDecomposition => "period_decomposition",
            Checker::TailDistances => "tail_distances",
            Checker::EqualDistances => "equal_distances",
        }
    }
}

impl fmt::Display for Checker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Checker {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Checker::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown checker {s:?}")))
    }
}

/// `count` maps drawn from one generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapBatch {
    pub spec: MapGenSpec,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub p: u64,
    pub seed: u64,
    pub batches: Vec<MapBatch>,
    /// Height bound B of the point box.
    pub box_height: usize,
    pub max_steps: usize,
    pub max_height: usize,
    pub period_threshold: u64,
    pub orbit_threshold: u64,
    pub checkers: Vec<Checker>,
    /// Seeded random instances for the distance checkers.
    pub random_instances: usize,
    /// Random points for distance checkers are drawn up to this height.
    pub instance_height: usize,
    /// Places of degree up to this bound are used by the distance checkers.
    pub distance_place_degree: usize,
    /// Places of degree up to this bound are used for period decompositions.
    pub mst_place_degree: usize,
    /// Not part of the report: the output is identical either way.
    #[serde(skip)]
    pub parallel: bool,
}

fn batch_seed(seed: u64, batch: u64) -> u64 {
    seed.wrapping_add(batch.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

impl CampaignConfig {
    /// An empty campaign over F_p(t) with default caps and thresholds.
    pub fn new(p: u64, box_height: usize, seed: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let (period_threshold, orbit_threshold) = bound_thresholds(p);
        Ok(CampaignConfig {
            p,
            seed,
            batches: Vec::new(),
            box_height,
            max_steps: default_max_steps(field.p()),
            max_height: default_max_height(box_height),
            period_threshold,
            orbit_threshold,
            checkers: Checker::ALL.to_vec(),
            random_instances: 1000,
            instance_height: 2,
            distance_place_degree: 2,
            mst_place_degree: 3,
            parallel: true,
        })
    }

    /// The standard mix: `maps` monic polynomials spread over degrees 2..=4
    /// and coefficient degrees 0..=3, `maps / 5` conjugates and `maps / 10`
    /// rejection-sampled maps.
    pub fn standard(p: u64, maps: usize, box_height: usize, seed: u64) -> Result<Self> {
        let mut cfg = Self::new(p, box_height, seed)?;
        let shapes: Vec<(usize, usize)> = (2..=4).flat_map(|d| (0..=3).map(move |c| (d, c))).collect();
        for (k, &(d, c)) in shapes.iter().enumerate() {
            let count = maps / shapes.len() + usize::from(k < maps % shapes.len());
            cfg.push_batch(MapFamily::MonicPoly, d, c, count);
        }
        let conj = maps / 5;
        for (k, d) in (2..=4).enumerate() {
            cfg.push_batch(
                MapFamily::ConjugatedMonicPoly,
                d,
                1,
                conj / 3 + usize::from(k < conj % 3),
            );
        }
        let rej = maps / 10;
        cfg.push_batch(MapFamily::RejectionRandom, 2, 1, rej - rej / 2);
        cfg.push_batch(MapFamily::RejectionRandom, 3, 0, rej / 2);
        Ok(cfg)
    }

    pub fn push_batch(&mut self, family: MapFamily, degree: usize, coeff_degree: usize, count: usize) {
        if count == 0 {
            return;
        }
        let seed = batch_seed(self.seed, self.batches.len() as u64);
        self.batches.push(MapBatch {
            spec: MapGenSpec::new(family, self.p, degree, coeff_degree, seed),
            count,
        });
    }

    pub fn map_count(&self) -> usize {
        self.batches.iter().map(|b| b.count).sum()
    }

    pub fn validate(&self) -> Result<PrimeField> {
        let field = PrimeField::new(self.p)?;
        for b in &self.batches {
            if b.spec.p != self.p {
                return Err(Error::FieldMismatch(b.spec.p as u32, self.p as u32));
            }
            b.spec.validate()?;
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidArgument("max_steps must be positive".into()));
        }
        Ok(field)
    }

    fn units(&self) -> Vec<(usize, &MapBatch, u64)> {
        let mut out = Vec::new();
        for b in &self.batches {
            for i in 0..b.count {
                out.push((out.len(), b, i as u64));
            }
        }
        out
    }

    fn has(&self, c: Checker) -> bool {
        self.checkers.contains(&c)
    }
}

/// One finite orbit observed from a box point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRow {
    pub map_id: usize,
    pub family: MapFamily,
    pub d: usize,
    pub point: String,
    pub tail: usize,
    pub cycle: usize,
    pub orbit_size: usize,
    pub threshold: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub checker: String,
    pub value: Option<u64>,
    pub threshold: Option<u64>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    /// Instances whose preconditions did not hold.
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationFailure {
    pub map_id: usize,
    pub family: MapFamily,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub maps_tested: usize,
    pub generation_failures: Vec<GenerationFailure>,
    pub maps_by_family: BTreeMap<MapFamily, usize>,
    pub points_examined: usize,
    pub finite_orbits: usize,
    pub height_escapes: usize,
    pub step_limited: usize,
    pub periodic_points_found: usize,
    pub period_histogram: BTreeMap<usize, usize>,
    pub orbit_size_histogram: BTreeMap<usize, usize>,
    pub max_period: usize,
    pub max_orbit_size: usize,
    pub checkers: BTreeMap<String, Tally>,
    pub mst_cases: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub orbits: Vec<OrbitRow>,
}

impl CampaignReport {
    fn empty(config: &CampaignConfig) -> Self {
        CampaignReport {
            config: config.clone(),
            maps_tested: 0,
            generation_failures: Vec::new(),
            maps_by_family: BTreeMap::new(),
            points_examined: 0,
            finite_orbits: 0,
            height_escapes: 0,
            step_limited: 0,
            periodic_points_found: 0,
            period_histogram: BTreeMap::new(),
            orbit_size_histogram: BTreeMap::new(),
            max_period: 0,
            max_orbit_size: 0,
            checkers: BTreeMap::new(),
            mst_cases: BTreeMap::new(),
            violations: Vec::new(),
            orbits: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// 0 when no violation was recorded, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.is_clean() {
            0
        } else {
            1
        }
    }

    pub fn tally(&self, checker: Checker) -> Tally {
        self.checkers.get(checker.name()).copied().unwrap_or_default()
    }

    fn absorb(&mut self, unit: UnitResult) {
        self.points_examined += unit.points_examined;
        self.finite_orbits += unit.rows.len();
        self.height_escapes += unit.height_escapes;
        self.step_limited += unit.step_limited;
        for row in &unit.rows {
            *self.orbit_size_histogram.entry(row.orbit_size).or_default() += 1;
            self.max_orbit_size = self.max_orbit_size.max(row.orbit_size);
            if row.tail == 0 {
                self.periodic_points_found += 1;
                *self.period_histogram.entry(row.cycle).or_default() += 1;
                self.max_period = self.max_period.max(row.cycle);
            }
        }
        self.orbits.extend(unit.rows);
        for (name, t) in unit.tallies {
            let e = self.checkers.entry(name).or_default();
            e.pass += t.pass;
            e.fail += t.fail;
            e.skipped += t.skipped;
        }
        for (case, n) in unit.mst_cases {
            *self.mst_cases.entry(case).or_default() += n;
        }
        self.violations.extend(unit.violations);
    }
}

#[derive(Default)]
struct UnitResult {
    points_examined: usize,
    height_escapes: usize,
    step_limited: usize,
    rows: Vec<OrbitRow>,
    tallies: BTreeMap<String, Tally>,
    mst_cases: BTreeMap<String, usize>,
    violations: Vec<Violation>,
}

impl UnitResult {
    fn record(&mut self, checker: Checker, instance: impl FnOnce() -> String, outcome: Result<Verdict>) {
        let t = self.tallies.entry(checker.name().to_string()).or_default();
        match outcome {
            Ok(v) if v.holds => t.pass += 1,
            Ok(v) => {
                t.fail += 1;
                self.violations.push(Violation {
                    instance: instance(),
                    checker: checker.name().to_string(),
                    value: None,
                    threshold: None,
                    witness: v.witness,
                });
            }
            Err(_) => t.skipped += 1,
        }
    }
}

fn run_units<T: Send>(parallel: bool, n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

/// Finite places of degree at most `max_degree`.
pub fn places_up_to(field: PrimeField, max_degree: usize) -> Vec<Place> {
    (1..=max_degree)
        .flat_map(|d| enumerate_monic_irreducibles(field, d))
        .map(Place::Finite)
        .collect()
}

fn instance_name(map_id: usize, map: &HomogMap, point: &ProjPoint) -> String {
    format!("map#{map_id} {map} @ {point}")
}

struct BoundContext<'a> {
    config: &'a CampaignConfig,
    points: Vec<ProjPoint>,
    mst_places: Vec<(Place, crate::algebra::ResidueField)>,
    pab_places: Vec<Place>,
}

/// The per-map analysis shared by both campaigns: orbits of every box
/// point, threshold comparison, and when `checks` is set the period and
/// tail checkers on whatever was found.
fn analyze_map(ctx: &BoundContext, map_id: usize, family: MapFamily, map: &HomogMap, checks: bool) -> UnitResult {
    let cfg = ctx.config;
    let mut out = UnitResult::default();
    let mut cache = OrbitCache::new(map, cfg.max_steps, cfg.max_height);
    let threshold = format!("{}/{}", cfg.period_threshold, cfg.orbit_threshold);
    let mut periodic = Vec::new();
    let mut preperiodic = Vec::new();
    for point in &ctx.points {
        out.points_examined += 1;
        let s = cache.classify(point);
        match s.status {
            OrbitStatus::HeightEscape => out.height_escapes += 1,
            OrbitStatus::StepLimit => out.step_limited += 1,
            OrbitStatus::FiniteOrbit => {
                let (tail, cycle) = (s.tail.expect("finite"), s.cycle.expect("finite"));
                let size = tail + cycle;
                let period_ok = tail > 0 || cycle as u64 <= cfg.period_threshold;
                let size_ok = size as u64 <= cfg.orbit_threshold;
                if !period_ok {
                    out.violations.push(Violation {
                        instance: instance_name(map_id, map, point),
                        checker: "period_bound".into(),
                        value: Some(cycle as u64),
                        threshold: Some(cfg.period_threshold),
                        witness: None,
                    });
                }
                if !size_ok {
                    out.violations.push(Violation {
                        instance: instance_name(map_id, map, point),
                        checker: "orbit_size_bound".into(),
                        value: Some(size as u64),
                        threshold: Some(cfg.orbit_threshold),
                        witness: None,
                    });
                }
                out.rows.push(OrbitRow {
                    map_id,
                    family,
                    d: map.degree(),
                    point: point.to_string(),
                    tail,
                    cycle,
                    orbit_size: size,
                    threshold: threshold.clone(),
                    ok: period_ok && size_ok,
                });
                if tail == 0 {
                    periodic.push((point.clone(), cycle));
                } else {
                    preperiodic.push((point.clone(), tail, cycle));
                }
            }
        }
    }
    if !checks {
        return out;
    }
    if cfg.has(Checker::CycleShift) {
        for (point, n) in &periodic {
            out.record(
                Checker::CycleShift,
                || instance_name(map_id, map, point),
                check_prop_61(map, point, *n),
            );
        }
    }
    if cfg.has(Checker::PeriodDecomposition) {
        for (place, k) in &ctx.mst_places {
            if !map.has_good_reduction(place) {
                continue;
            }
            let reduced = crate::dynamics::ResidueMap::with_field(map, k);
            let graph = FunctionalGraph::from_residue_map(&reduced);
            for (point, n) in &periodic {
                let t = out
                    .tallies
                    .entry(Checker::PeriodDecomposition.name().to_string())
                    .or_default();
                match verify_mst_with(map, point, *n, place, &reduced, &graph) {
                    Ok(dec) => {
                        *out.mst_cases.entry(dec.case.to_string()).or_default() += 1;
                        if dec.case == MstCase::Violation {
                            t.fail += 1;
                            out.violations.push(Violation {
                                instance: instance_name(map_id, map, point),
                                checker: Checker::PeriodDecomposition.name().into(),
                                value: Some(*n as u64),
                                threshold: None,
                                witness: Some(Witness {
                                    place: place.to_string(),
                                    indices: vec![dec.m as i64, dec.r.map_or(-1, |r| r as i64)],
                                    values: vec![*n as i64],
                                }),
                            });
                        } else {
                            t.pass += 1;
                        }
                    }
                    Err(_) => t.skipped += 1,
                }
            }
        }
    }
    if cfg.has(Checker::TailDistances) {
        for (point, tail, cycle) in &preperiodic {
            // Re-base at a fixed point of ψ = φ^cycle.
            let steps = tail.div_ceil(*cycle);
            let mut chain = vec![point.clone()];
            for _ in 0..steps {
                chain.push(map.iterate(chain.last().expect("nonempty"), *cycle));
            }
            let mut places: BTreeSet<Place> = ctx.pab_places.iter().cloned().collect();
            if let Ok(support) = joint_support(&chain) {
                places.extend(support);
            }
            for place in &places {
                if !map.has_good_reduction(place) {
                    continue;
                }
                let direct = check_lemma_pab_power(map, *cycle, &chain, place);
                let normalized = check_lemma_pab_normalized(map, *cycle, &chain, place);
                let outcome = match (&direct, &normalized) {
                    (Ok(a), Ok(b)) if a.holds != b.holds => {
                        Ok(Verdict::fail(place, vec![], vec![a.holds as i64, b.holds as i64]))
                    }
                    _ => direct,
                };
                out.record(Checker::TailDistances, || instance_name(map_id, map, point), outcome);
            }
        }
    }
    out
}

fn bound_context(config: &CampaignConfig, field: PrimeField, with_checks: bool) -> BoundContext<'_> {
    let (mst_places, pab_places) = if with_checks {
        (
            places_up_to(field, config.mst_place_degree)
                .into_iter()
                .map(|pl| {
                    let k = pl.residue_field().expect("finite");
                    (pl, k)
                })
                .collect(),
            places_up_to(field, config.distance_place_degree.min(2)),
        )
    } else {
        (Vec::new(), Vec::new())
    };
    BoundContext {
        config,
        points: enumerate_points(field, Height(config.box_height)),
        mst_places,
        pab_places,
    }
}

fn run_maps(config: &CampaignConfig, report: &mut CampaignReport, field: PrimeField, with_checks: bool) {
    let ctx = bound_context(config, field, with_checks);
    let units = config.units();
    let results = run_units(config.parallel, units.len(), |u| {
        let (map_id, batch, index) = units[u];
        match gen_map(&batch.spec, index) {
            Ok(map) => Ok((
                batch.spec.family,
                analyze_map(&ctx, map_id, batch.spec.family, &map, with_checks),
            )),
            Err(e) => Err(GenerationFailure {
                map_id,
                family: batch.spec.family,
                error: e.to_string(),
            }),
        }
    });
    for r in results {
        match r {
            Ok((family, unit)) => {
                report.maps_tested += 1;
                *report.maps_by_family.entry(family).or_default() += 1;
                report.absorb(unit);
            }
            Err(f) => report.generation_failures.push(f),
        }
    }
}

/// Orbits of every box point under every generated map, compared against
/// the period and orbit-size thresholds.
pub fn run_bound_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    let field = config.validate()?;
    let mut report = CampaignReport::empty(config);
    run_maps(config, &mut report, field, false);
    Ok(report)
}

fn random_point(rng: &mut impl Rng, field: PrimeField, height: usize) -> ProjPoint {
    loop {
        let x = random_poly(rng, field, height);
        let y = random_poly(rng, field, height);
        if let Ok(p) = ProjPoint::from_polys(x, y) {
            if p.height().0 <= height {
                return p;
            }
        }
    }
}

fn distinct_points<const N: usize>(rng: &mut impl Rng, field: PrimeField, height: usize) -> [ProjPoint; N] {
    loop {
        let pts: [ProjPoint; N] = std::array::from_fn(|_| random_point(rng, field, height));
        let set: BTreeSet<_> = pts.iter().collect();
        if set.len() == N {
            return pts;
        }
    }
}

/// Stream offset separating instance generators from map generators.
const INSTANCE_STREAM: u64 = 1 << 40;

/// Runs the selected checkers on seeded random instances and on every
/// periodic and preperiodic point the maps produce in the box.
pub fn run_property_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    let field = config.validate()?;
    let mut report = CampaignReport::empty(config);
    run_maps(config, &mut report, field, true);

    let n = config.random_instances;
    let h = config.instance_height;
    let mut places = places_up_to(field, config.distance_place_degree);

    if config.has(Checker::Contraction) && config.map_count() > 0 {
        let units = config.units();
        let results = run_units(config.parallel, n, |i| {
            let mut rng = map_rng(config.seed, INSTANCE_STREAM + 2 * i as u64);
            let (_, batch, index) = units[i % units.len()];
            let mut out = UnitResult::default();
            let Ok(map) = gen_map(&batch.spec, index) else {
                return out;
            };
            let good: Vec<&Place> = places.iter().filter(|pl| map.has_good_reduction(pl)).collect();
            // Redraw until the images differ; colliding images carry no distance.
            for _ in 0..64 {
                let [p, q] = distinct_points::<2>(&mut rng, field, h);
                if map.evaluate(&p) == map.evaluate(&q) || good.is_empty() {
                    continue;
                }
                let place = *good.choose(&mut rng).expect("nonempty");
                let outcome = check_prop_52(&map, &p, &q, place);
                out.record(
                    Checker::Contraction,
                    || format!("{} @ {p}, {q} at {place}", map),
                    outcome,
                );
                break;
            }
            out
        });
        for r in results {
            report.absorb(r);
        }
    }

    places.push(Place::Infinity);
    if config.has(Checker::Ultrametric) {
        let results = run_units(config.parallel, n, |i| {
            let mut rng = map_rng(config.seed, INSTANCE_STREAM + 2 * i as u64 + 1);
            let [a, b, c] = distinct_points::<3>(&mut rng, field, h);
            let mut out = UnitResult::default();
            for place in &places {
                let outcome = check_prop_51(&a, &b, &c, place);
                out.record(Checker::Ultrametric, || format!("{a}, {b}, {c} at {place}"), outcome);
            }
            out
        });
        for r in results {
            report.absorb(r);
        }
    }

    if config.has(Checker::EqualDistances) {
        let mut out = UnitResult::default();
        let mut consts: Vec<ProjPoint> = (0..field.p()).map(|c| ProjPoint::constant(field, c)).collect();
        consts.push(ProjPoint::infinity(field));
        let mut configurations = vec![consts];
        let mut rng = map_rng(config.seed, INSTANCE_STREAM - 1);
        for size in 2..=6 {
            configurations.push(distinct_points::<6>(&mut rng, field, h)[..size].to_vec());
        }
        for (i, pts) in configurations.iter().enumerate() {
            let outcome = check_lemma_equal_distances(pts, config.p).map(|r| Verdict {
                // The constant configuration must satisfy the hypothesis.
                holds: r.bound_ok && (i > 0 || r.hypothesis),
                witness: r.witness,
            });
            out.record(Checker::EqualDistances, || format!("configuration {i}"), outcome);
        }
        report.absorb(out);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert_eq!(bound_thresholds(2), (3, 9));
        assert_eq!(bound_thresholds(3), (72, 288));
        assert_eq!(bound_thresholds(5), (120, 720));
        assert_eq!(bound_thresholds(7), (336, 2688));
    }

    #[test]
    fn standard_mix_counts() {
        let cfg = CampaignConfig::standard(2, 500, 3, 42).unwrap();
        let count =
            |f: MapFamily| -> usize { cfg.batches.iter().filter(|b| b.spec.family == f).map(|b| b.count).sum() };
        assert_eq!(count(MapFamily::MonicPoly), 500);
        assert_eq!(count(MapFamily::ConjugatedMonicPoly), 100);
        assert_eq!(count(MapFamily::RejectionRandom), 50);
    }

    #[test]
    fn small_bound_campaign_is_clean() {
        let cfg = CampaignConfig::standard(2, 24, 2, 1).unwrap();
        let r = run_bound_campaign(&cfg).unwrap();
        assert_eq!(r.maps_tested + r.generation_failures.len(), cfg.map_count());
        assert!(r.is_clean(), "{:?}", r.violations);
        assert!(r.max_period <= 3 && r.max_orbit_size <= 9);
        assert!(r.periodic_points_found >= r.maps_tested, "∞ is fixed by polynomials");
    }

    #[test]
    fn injected_threshold_produces_violations() {
        let mut cfg = CampaignConfig::standard(2, 12, 1, 5).unwrap();
        cfg.period_threshold = 0;
        let r = run_bound_campaign(&cfg).unwrap();
        assert!(!r.is_clean());
        assert_eq!(r.exit_code(), 1);
        assert!(r.violations.iter().all(|v| v.checker == "period_bound"));
    }

    #[test]
    fn serial_equals_parallel() {
        let mut cfg = CampaignConfig::standard(3, 12, 1, 9).unwrap();
        cfg.random_instances = 40;
        let par = run_property_campaign(&cfg).unwrap();
        cfg.parallel = false;
        let mut ser = run_property_campaign(&cfg).unwrap();
        ser.config.parallel = true;
        assert_eq!(par, ser);
    }

    #[test]
    fn maxima_monotone_in_box() {
        let small = run_bound_campaign(&CampaignConfig::standard(2, 24, 1, 3).unwrap()).unwrap();
        let large = run_bound_campaign(&CampaignConfig::standard(2, 24, 2, 3).unwrap()).unwrap();
        assert!(large.max_period >= small.max_period);
        assert!(large.max_orbit_size >= small.max_orbit_size);
    }

    #[test]
    fn checker_names_round_trip() {
        for c in Checker::ALL {
            assert_eq!(c.name().parse::<Checker>(), Ok(c));
        }
        assert!("prop_99".parse::<Checker>().is_err());
    }
}
