use std::collections::HashMap;

use crate::dynamics::HomogMap;
use crate::geometry::ProjPoint;
use crate::orbits::OrbitStatus;

/// Intrinsic fate of a point: its tail and cycle, or the number of
/// evaluations until an iterate exceeds the height cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Fate {
    Finite { tail: usize, cycle: usize },
    Escape { steps: usize },
}

/// Outcome of one start point, matching what `iterate_orbit` reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitSummary {
    pub status: OrbitStatus,
    pub tail: Option<usize>,
    pub cycle: Option<usize>,
}

impl OrbitSummary {
    pub fn orbit_size(&self) -> Option<usize> {
        Some(self.tail? + self.cycle?)
    }
}

/// Memoized orbit classification for many start points of one map. Points
/// sharing a forward orbit are evaluated once.
pub struct OrbitCache<'a> {
    map: &'a HomogMap,
    max_steps: usize,
    max_height: usize,
    fates: HashMap<ProjPoint, Fate>,
}

impl<'a> OrbitCache<'a> {
    pub fn new(map: &'a HomogMap, max_steps: usize, max_height: usize) -> Self {
        OrbitCache {
            map,
            max_steps: max_steps.max(1),
            max_height,
            fates: HashMap::new(),
        }
    }

    fn summarize(&self, fate: Fate) -> OrbitSummary {
        match fate {
            Fate::Finite { tail, cycle } if tail + cycle <= self.max_steps => OrbitSummary {
                status: OrbitStatus::FiniteOrbit,
                tail: Some(tail),
                cycle: Some(cycle),
            },
            Fate::Escape { steps } if steps <= self.max_steps => OrbitSummary {
                status: OrbitStatus::HeightEscape,
                tail: None,
                cycle: None,
            },
            _ => OrbitSummary {
                status: OrbitStatus::StepLimit,
                tail: None,
                cycle: None,
            },
        }
    }

    pub fn classify(&mut self, start: &ProjPoint) -> OrbitSummary {
        if let Some(&fate) = self.fates.get(start) {
            return self.summarize(fate);
        }
        let mut path = vec![start.clone()];
        let mut index: HashMap<ProjPoint, usize> = HashMap::from([(start.clone(), 0)]);
        // Fate of path[s] where s = path.len() - 1 after the walk.
        let resolved = loop {
            if path.len() > self.max_steps {
                return self.summarize(Fate::Escape { steps: usize::MAX });
            }
            let next = self.map.evaluate(path.last().expect("nonempty"));
            let s = path.len();
            if let Some(&j) = index.get(&next) {
                let cycle = s - j;
                for (i, q) in path.iter().enumerate() {
                    let tail = j.saturating_sub(i);
                    self.fates.insert(q.clone(), Fate::Finite { tail, cycle });
                }
                break None;
            }
            if let Some(&fate) = self.fates.get(&next) {
                break Some((s, fate));
            }
            if next.height().0 > self.max_height {
                break Some((s, Fate::Escape { steps: 0 }));
            }
            index.insert(next.clone(), s);
            path.push(next);
        };
        if let Some((s, fate)) = resolved {
            for (i, q) in path.iter().enumerate() {
                let fate = match fate {
                    Fate::Finite { tail, cycle } => Fate::Finite {
                        tail: tail + s - i,
                        cycle,
                    },
                    Fate::Escape { steps } => Fate::Escape { steps: steps + s - i },
                };
                self.fates.insert(q.clone(), fate);
            }
        }
        self.summarize(self.fates[start])
    }
}
