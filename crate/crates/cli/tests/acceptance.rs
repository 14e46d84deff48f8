//! Acceptance criteria 1 to 9. Each prints one PASS/FAIL line; the process
//! exits nonzero when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode, Stdio};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ffdyn::algebra::{FpPoly, PrimeField};
use ffdyn::dynamics::forms::resultant;
use ffdyn::dynamics::{HomogMap, ResidueMap};
use ffdyn::funcfield::{eta_bound, poly_valuation, Place};
use ffdyn::geometry::{reduce_point_at, ProjPoint};
use ffdyn::harness::{
    gen_map, map_rng, places_up_to, random_poly, run_bound_campaign, run_property_campaign, CampaignConfig,
    CampaignReport, Checker, MapFamily, Tally,
};
use ffdyn::orbits::{check_lemma_equal_distances, check_prop_52, prop_52_distances, verify_mst, MstCase};
use rand::Rng;

const SEED: u64 = 20240601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

type Criterion = fn() -> Outcome;

struct BoundRun {
    config: CampaignConfig,
    report: CampaignReport,
    elapsed: Duration,
}

/// The campaigns behind criteria 1, 2 and 6: p = 2 at the full size and
/// height 3 on one thread, height 2 for p = 3 and p = 5.
fn bound_runs() -> &'static [BoundRun] {
    static RUNS: OnceLock<Vec<BoundRun>> = OnceLock::new();
    RUNS.get_or_init(|| {
        [(2, 500, 3), (3, 200, 2), (5, 100, 2)]
            .into_iter()
            .map(|(p, maps, height)| {
                let mut config = CampaignConfig::standard(p, maps, height, SEED).unwrap();
                config.parallel = p != 2;
                let start = Instant::now();
                let report = run_bound_campaign(&config).unwrap();
                BoundRun {
                    config,
                    report,
                    elapsed: start.elapsed(),
                }
            })
            .collect()
    })
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn places_count(p: usize, degree: usize) -> usize {
    // Monic irreducibles of degree 1, 2, 3 over F_p.
    [p, (p * p - p) / 2, (p * p * p - p) / 3][..degree].iter().sum()
}

fn tally(report: &CampaignReport, checker: Checker) -> Tally {
    report.checkers.get(checker.name()).copied().unwrap_or_default()
}

fn criterion_1() -> Outcome {
    let run = &bound_runs()[0];
    let r = &run.report;
    let conj = r
        .maps_by_family
        .get(&MapFamily::ConjugatedMonicPoly)
        .copied()
        .unwrap_or(0);
    let monic = r.maps_by_family.get(&MapFamily::MonicPoly).copied().unwrap_or(0);
    let rejection = r.maps_by_family.get(&MapFamily::RejectionRandom).copied().unwrap_or(0);
    let too_long = r.period_histogram.keys().filter(|&&n| n > 3).count();
    let ok = monic >= 500
        && conj >= 100
        && rejection > 0
        && r.generation_failures.is_empty()
        && run.config.box_height == 3
        && too_long == 0
        && r.max_period <= 3
        && r.step_limited == 0
        && run.elapsed <= Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "p=2, {} maps ({monic} monic, {conj} conjugated, {rejection} rejection), {} points, {} periodic, max period {} <= 3, {} step-limited, {:.2}s single-threaded",
            r.maps_tested,
            r.points_examined,
            r.periodic_points_found,
            r.max_period,
            r.step_limited,
            run.elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let expected = [(2, 3, 9), (3, 72, 288), (5, 120, 720)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (run, (p, period, orbit)) in bound_runs().iter().zip(expected) {
        let r = &run.report;
        let c = &run.config;
        let good = c.p == p
            && c.period_threshold == period
            && c.orbit_threshold == orbit
            && r.max_period as u64 <= period
            && r.max_orbit_size as u64 <= orbit
            && r.orbit_size_histogram.keys().all(|&s| s as u64 <= orbit)
            && r.step_limited == 0
            && r.generation_failures.is_empty()
            && r.is_clean();
        ok &= good;
        parts.push(format!(
            "p={p} B={}: {} maps, max orbit {} <= {orbit}, max period {} <= {period}, {} violations",
            c.box_height,
            r.maps_tested,
            r.max_orbit_size,
            r.max_period,
            r.violations.len()
        ));
    }
    outcome(ok, parts.join("; "))
}

/// `(p s)^(4D) * max((p s)^(2D), p^(4s-2))` in machine integers.
fn eta_by_hand(p: u128, d: u32, s: u32) -> u128 {
    let ps = p * s as u128;
    ps.pow(4 * d) * ps.pow(2 * d).max(p.pow(4 * s - 2))
}

fn criterion_3() -> Outcome {
    let a = eta_by_hand(2, 1, 1);
    let b = eta_by_hand(3, 1, 1);
    let la = eta_bound(2, 1, 1).unwrap().as_u64();
    let lb = eta_bound(3, 1, 1).unwrap().as_u64();
    let ok = a == 64 && b == 729 && la == Some(64) && lb == Some(729);
    outcome(
        ok,
        format!("eta(2,1,1) = {la:?} (hand {a}), eta(3,1,1) = {lb:?} (hand {b})"),
    )
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [2u64, 3, 5] {
        let mut cfg = CampaignConfig::new(p, 0, SEED).unwrap();
        cfg.checkers = vec![Checker::Ultrametric];
        cfg.random_instances = 1000;
        cfg.distance_place_degree = 2;
        let r = run_property_campaign(&cfg).unwrap();
        let t = tally(&r, Checker::Ultrametric);
        let expected = 1000 * (places_count(p as usize, 2) + 1);
        ok &= t.pass == expected && t.fail == 0 && t.skipped == 0;
        parts.push(format!("p={p}: {}/{expected} pass", t.pass));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [2u64, 3, 5] {
        let mut cfg = CampaignConfig::standard(p, 50, 1, SEED).unwrap();
        cfg.checkers = vec![Checker::Contraction];
        cfg.random_instances = 1000;
        let r = run_property_campaign(&cfg).unwrap();
        let t = tally(&r, Checker::Contraction);
        ok &= t.pass == 1000 && t.fail == 0 && t.skipped == 0;
        parts.push(format!("p={p}: {}/1000 pass", t.pass));
    }
    // At a bad place the distance can shrink, and the checker refuses.
    let f2 = field(2);
    let bad = HomogMap::parse_affine("(x^2+x)/t", f2).unwrap();
    let t = Place::parse("t", f2).unwrap();
    let (p0, q0) = (ProjPoint::parse("0", f2).unwrap(), ProjPoint::parse("t", f2).unwrap());
    let distances = prop_52_distances(&bad, &p0, &q0, &t).unwrap();
    let refused = check_prop_52(&bad, &p0, &q0, &t).is_err();
    ok &= !bad.has_good_reduction(&t) && distances.1 < distances.0 && refused;
    parts.push(format!(
        "control (x^2+x)/t at t: distance {} -> {}, checker refused: {refused}",
        distances.0, distances.1
    ));
    outcome(ok, parts.join(", "))
}

fn campaign_maps(config: &CampaignConfig) -> Vec<HomogMap> {
    config
        .batches
        .iter()
        .flat_map(|b| (0..b.count as u64).map(move |i| gen_map(&b.spec, i).unwrap()))
        .collect()
}

/// Order of `x` in (F_p[t]/π)^*, by repeated multiplication.
fn multiplicative_order(x: &FpPoly, pi: &FpPoly) -> u64 {
    let one = FpPoly::one(pi.field());
    let mut y = x.clone();
    let mut k = 1;
    while y != one {
        y = (&y * x).rem(pi).unwrap();
        k += 1;
    }
    k
}

/// Reduced period and multiplier order found by direct iteration, compared
/// with the library decomposition. Returns (checked, disagreements).
fn mst_oracle(run: &BoundRun) -> (usize, usize) {
    let maps = campaign_maps(&run.config);
    let field = field(run.config.p);
    let places = places_up_to(field, 3);
    let p = run.config.p;
    let (mut checked, mut bad) = (0, 0);
    for row in run.report.orbits.iter().filter(|r| r.tail == 0) {
        let map = &maps[row.map_id];
        let point = ProjPoint::parse(&row.point, field).unwrap();
        let n = row.cycle;
        for place in &places {
            let pi = place.modulus().unwrap();
            let reduced = ResidueMap::new(map, place).unwrap();
            let start = reduce_point_at(&point, place).unwrap();
            let mut m = 1;
            let mut q = reduced.evaluate(&start);
            while q != start {
                q = reduced.evaluate(&q);
                m += 1;
            }
            let lambda = reduced.multiplier(&start, m).rem(pi).unwrap();
            let r = (!lambda.is_zero()).then(|| multiplicative_order(&lambda, pi));
            let consistent = match r {
                None => n == m,
                Some(r) => {
                    let mut k = (m as u64) * r;
                    let mut hit = n as u64 == m as u64 || n as u64 == k;
                    while !hit && k < n as u64 {
                        k *= p;
                        hit = k == n as u64;
                    }
                    hit
                }
            };
            let dec = verify_mst(map, &point, n, place).unwrap();
            checked += 1;
            if !consistent || dec.m != m || dec.r != r || dec.case == MstCase::Violation {
                bad += 1;
            }
        }
    }
    (checked, bad)
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for run in bound_runs() {
        let mut cfg = run.config.clone();
        cfg.checkers = vec![Checker::CycleShift, Checker::PeriodDecomposition];
        cfg.mst_place_degree = 3;
        cfg.random_instances = 0;
        let r = run_property_campaign(&cfg).unwrap();
        let periodic = run.report.periodic_points_found;
        let shift = tally(&r, Checker::CycleShift);
        let mst = tally(&r, Checker::PeriodDecomposition);
        let expected_mst = periodic * places_count(cfg.p as usize, 3);
        let good = r.periodic_points_found == periodic
            && shift.pass == periodic
            && shift.fail + shift.skipped == 0
            && mst.pass == expected_mst
            && mst.fail + mst.skipped == 0
            && r.is_clean();
        ok &= good;
        parts.push(format!(
            "p={}: {periodic} periodic points, cycle shift {}/{periodic}, decomposition {}/{expected_mst} {:?}",
            cfg.p, shift.pass, mst.pass, r.mst_cases
        ));
    }
    for run in &bound_runs()[..2] {
        let (checked, bad) = mst_oracle(run);
        ok &= bad == 0 && checked > 0;
        parts.push(format!(
            "p={} direct-iteration oracle {}/{checked} agree",
            run.config.p,
            checked - bad
        ));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [2u64, 3, 5, 7] {
        let f = field(p);
        let mut consts: Vec<ProjPoint> = (0..p as u32).map(|c| ProjPoint::constant(f, c)).collect();
        consts.push(ProjPoint::infinity(f));
        let r = check_lemma_equal_distances(&consts, p).unwrap();
        let count = consts.len() as u64;
        // δ_t(0, 1) = 0 but δ_t(0, t) = 1.
        let mixed = ["0", "1", "t"].map(|s| ProjPoint::parse(s, f).unwrap());
        let m = check_lemma_equal_distances(&mixed, p).unwrap();
        ok &= r.hypothesis && r.bound_ok && count <= p * p && !m.hypothesis;
        parts.push(format!(
            "p={p}: {count} constants, hypothesis {}, {count} <= {}; mixed hypothesis {}",
            r.hypothesis,
            p * p,
            m.hypothesis
        ));
    }
    outcome(ok, parts.join(", "))
}

fn poly_pow(x: &FpPoly, e: usize) -> FpPoly {
    (0..e).fold(FpPoly::one(x.field()), |acc, _| &acc * x)
}

/// `Σ F_i b^(m-i) c^i` for `F = Σ F_i X^(m-i) Y^i`.
fn eval_form(f: &[FpPoly], b: &FpPoly, c: &FpPoly) -> FpPoly {
    let m = f.len() - 1;
    f.iter().enumerate().fold(FpPoly::zero(b.field()), |acc, (i, fi)| {
        &acc + &(&(fi * &poly_pow(b, m - i)) * &poly_pow(c, i))
    })
}

fn mul_forms(a: &[FpPoly], b: &[FpPoly]) -> Vec<FpPoly> {
    let mut out = vec![FpPoly::zero(a[0].field()); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn random_form(rng: &mut impl Rng, f: PrimeField, degree: usize) -> Vec<FpPoly> {
    (0..=degree).map(|_| random_poly(rng, f, 2)).collect()
}

fn criterion_8() -> Outcome {
    let primes = [2u64, 3, 5, 7];
    let mut rng = map_rng(SEED, 8);

    let mut roots_ok = 0;
    let mut nonzero = 0;
    for i in 0..100 {
        let f = field(primes[i % 4]);
        let n = rng.gen_range(1..=3);
        let roots: Vec<(FpPoly, FpPoly)> = (0..n)
            .map(|_| loop {
                let (b, c) = (random_poly(&mut rng, f, 2), random_poly(&mut rng, f, 2));
                if !(b.is_zero() && c.is_zero()) {
                    break (b, c);
                }
            })
            .collect();
        // G = Π (c_j X - b_j Y) vanishes at each [b_j : c_j].
        let g = roots
            .iter()
            .fold(vec![FpPoly::one(f)], |acc, (b, c)| mul_forms(&acc, &[c.clone(), -b]));
        let m = rng.gen_range(1..=3);
        let form = random_form(&mut rng, f, m);
        let product = roots
            .iter()
            .fold(FpPoly::one(f), |acc, (b, c)| &acc * &eval_form(&form, b, c));
        let expected = if (m * n) % 2 == 1 { -product } else { product };
        let res = resultant(&form, &g);
        nonzero += usize::from(!res.is_zero());
        roots_ok += usize::from(res == expected);
    }

    let mut mult_ok = 0;
    for i in 0..100 {
        let f = field(primes[i % 4]);
        let (a, b, c) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let form = random_form(&mut rng, f, a);
        let g1 = random_form(&mut rng, f, b);
        let g2 = random_form(&mut rng, f, c);
        let lhs = resultant(&form, &mul_forms(&g1, &g2));
        let rhs = &resultant(&form, &g1) * &resultant(&form, &g2);
        mult_ok += usize::from(lhs.is_zero() == rhs.is_zero() && lhs.monic() == rhs.monic());
    }

    let (mut pairs, mut agree, mut drops) = (0, 0, 0);
    for i in 0..200 {
        let p = primes[i % 2];
        let f = field(p);
        let d = 2 + i % 2;
        let Ok(map) = HomogMap::from_polys(random_form(&mut rng, f, d), random_form(&mut rng, f, d)) else {
            continue;
        };
        for place in places_up_to(f, 2) {
            let unit = poly_valuation(map.resultant(), &place) == Some(0);
            let full = map.reduce_map(&place).unwrap().has_full_degree();
            pairs += 1;
            agree += usize::from(unit == full);
            drops += usize::from(!full);
        }
    }

    let ok = roots_ok == 100 && mult_ok == 100 && agree == pairs && pairs > 0 && drops > 0;
    outcome(
        ok,
        format!(
            "product over roots {roots_ok}/100 ({nonzero} nonzero), multiplicativity {mult_ok}/100, reduction criterion {agree}/{pairs} map-place pairs ({drops} with degree drop)"
        ),
    )
}

fn run_cli(args: &[&str], threads: &str) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_ffdyn"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads)
        .stderr(Stdio::null())
        .status()
        .unwrap()
        .code()
        .unwrap_or(-1)
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for ext in ["json", "csv"] {
        let paths: Vec<_> = ["a", "b", "serial"]
            .iter()
            .map(|n| dir.path().join(format!("{n}.{ext}")))
            .collect();
        let out: Vec<_> = paths.iter().map(|p| p.to_str().unwrap().to_string()).collect();
        let base = [
            "verify-bounds",
            "-p",
            "2",
            "--maps",
            "500",
            "--height",
            "3",
            "--seed",
            "99",
            "--out",
        ];
        let codes = [
            run_cli(&[&base[..], &[out[0].as_str()]].concat(), "4"),
            run_cli(&[&base[..], &[out[1].as_str()]].concat(), "4"),
            run_cli(&[&base[..], &[out[2].as_str(), "--serial"]].concat(), "1"),
        ];
        let bytes: Vec<Vec<u8>> = paths.iter().map(|p| std::fs::read(p).unwrap_or_default()).collect();
        let same = !bytes[0].is_empty() && bytes[0] == bytes[1] && bytes[0] == bytes[2];
        ok &= same && codes == [0, 0, 0];
        parts.push(format!(
            "{ext}: {} bytes, identical across runs and serial/parallel: {same}",
            bytes[0].len()
        ));
    }
    outcome(ok, parts.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("periodic bound p=2", criterion_1),
        ("orbit-size bounds p=2,3,5", criterion_2),
        ("effective bound evaluator", criterion_3),
        ("ultrametric distance triples", criterion_4),
        ("contraction under good reduction", criterion_5),
        ("cycle shift and period decomposition", criterion_6),
        ("equal-distance configurations", criterion_7),
        ("resultant and reduction oracles", criterion_8),
        ("report determinism", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        failures += usize::from(!result.ok);
        println!(
            "{} criterion {} ({name}) [{:.1}s]: {}",
            if result.ok { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64(),
            result.detail
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
