use std::collections::HashMap;

use serde::Serialize;

use crate::dynamics::HomogMap;
use crate::funcfield::eta_bound;
use crate::geometry::ProjPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrbitStatus {
    /// The orbit re-entered an earlier point.
    FiniteOrbit,
    /// An iterate exceeded the height cap.
    HeightEscape,
    /// The step budget ran out below the height cap.
    StepLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub start: ProjPoint,
    pub status: OrbitStatus,
    /// Distinct iterates `P, φ(P), ...` in order. On escape the offending
    /// iterate is not included.
    pub points: Vec<ProjPoint>,
    /// For a finite orbit, the index at which the cycle starts.
    pub tail: Option<usize>,
    pub cycle: Option<usize>,
}

impl OrbitReport {
    pub fn is_finite(&self) -> bool {
        self.status == OrbitStatus::FiniteOrbit
    }

    /// `|O_φ(P)| = tail + cycle`.
    pub fn orbit_size(&self) -> Option<usize> {
        Some(self.tail? + self.cycle?)
    }

    /// A finite orbit with empty tail.
    pub fn is_periodic(&self) -> bool {
        self.tail == Some(0)
    }

    pub fn cycle_points(&self) -> &[ProjPoint] {
        match self.tail {
            Some(t) => &self.points[t..],
            None => &[],
        }
    }

    pub fn tail_points(&self) -> &[ProjPoint] {
        match self.tail {
            Some(t) => &self.points[..t],
            None => &self.points,
        }
    }
}

/// Step cap `4·η(p, 1, 1)`, saturating.
pub fn default_max_steps(p: u32) -> usize {
    eta_bound(p as u64, 1, 1)
        .ok()
        .and_then(|e| e.as_u64())
        .map(|e| e.saturating_mul(4))
        .unwrap_or(u64::MAX)
        .try_into()
        .unwrap_or(usize::MAX)
}

/// Height cap `8·(B + 1)` for a search box of height B.
pub fn default_max_height(box_height: usize) -> usize {
    8 * (box_height + 1)
}

/// Iterates φ from `start`, detecting re-entry by exact comparison of
/// canonical points. At most `max_steps` evaluations are made.
pub fn iterate_orbit(map: &HomogMap, start: &ProjPoint, max_steps: usize, max_height: usize) -> OrbitReport {
    let mut seen: HashMap<ProjPoint, usize> = HashMap::new();
    let mut points = vec![start.clone()];
    seen.insert(start.clone(), 0);
    let mut status = OrbitStatus::StepLimit;
    let mut tail = None;
    for _ in 0..max_steps.max(1) {
        let next = map.evaluate(points.last().expect("nonempty"));
        if let Some(&j) = seen.get(&next) {
            status = OrbitStatus::FiniteOrbit;
            tail = Some(j);
            break;
        }
        if next.height().0 > max_height {
            status = OrbitStatus::HeightEscape;
            break;
        }
        seen.insert(next.clone(), points.len());
        points.push(next);
    }
    let cycle = tail.map(|t| points.len() - t);
    OrbitReport {
        start: start.clone(),
        status,
        points,
        tail,
        cycle,
    }
}

/// Least n in `1..=max_n` with φⁿ(P) = P.
pub fn minimal_period(map: &HomogMap, point: &ProjPoint, max_n: usize) -> Option<usize> {
    let mut cur = point.clone();
    for n in 1..=max_n {
        cur = map.evaluate(&cur);
        if &cur == point {
            return Some(n);
        }
    }
    None
}
