use crate::algebra::{FpPoly, ResidueField};
use crate::dynamics::{HomogMap, ResidueMap};
use crate::error::{Error, Result};
use crate::funcfield::Place;
use crate::geometry::ResiduePoint;

/// Largest P¹(k(π)) explored exhaustively by default.
pub const DEFAULT_GRAPH_CAP: u64 = 10_000;

/// The functional graph of a reduced map on P¹(k(π)). Points are indexed
/// as in [`ResiduePoint::index`], infinity last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalGraph {
    field: ResidueField,
    image: Vec<usize>,
    tail: Vec<usize>,
    cycle: Vec<usize>,
}

impl FunctionalGraph {
    pub fn from_residue_map(map: &ResidueMap) -> Self {
        Self::from_images(map.field().clone(), map.image_table())
    }

    /// Tail and cycle lengths of every node of `x -> image[x]`.
    pub fn from_images(field: ResidueField, image: Vec<usize>) -> Self {
        const UNSEEN: usize = usize::MAX;
        let n = image.len();
        let mut tail = vec![UNSEEN; n];
        let mut cycle = vec![UNSEEN; n];
        // Position of a node on the current walk, if any.
        let mut on_path = vec![UNSEEN; n];
        for start in 0..n {
            if tail[start] != UNSEEN {
                continue;
            }
            let mut path = Vec::new();
            let mut x = start;
            while tail[x] == UNSEEN && on_path[x] == UNSEEN {
                on_path[x] = path.len();
                path.push(x);
                x = image[x];
            }
            let (mut base_tail, base_cycle, mut rest) = if tail[x] == UNSEEN {
                // Closed a new cycle at path[pos..].
                let pos = on_path[x];
                let len = path.len() - pos;
                for &c in &path[pos..] {
                    tail[c] = 0;
                    cycle[c] = len;
                }
                (0, len, pos)
            } else {
                (tail[x], cycle[x], path.len())
            };
            while rest > 0 {
                rest -= 1;
                base_tail += 1;
                tail[path[rest]] = base_tail;
                cycle[path[rest]] = base_cycle;
            }
            for &v in &path {
                on_path[v] = UNSEEN;
            }
        }
        FunctionalGraph {
            field,
            image,
            tail,
            cycle,
        }
    }

    pub fn modulus(&self) -> &FpPoly {
        self.field.modulus()
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    /// Number of points, `p^{deg π} + 1`.
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.image[i]
    }

    /// Steps until `i` reaches a cycle.
    pub fn tail(&self, i: usize) -> usize {
        self.tail[i]
    }

    /// Length of the cycle eventually reached from `i`.
    pub fn cycle_len(&self, i: usize) -> usize {
        self.cycle[i]
    }

    pub fn point(&self, i: usize) -> ResiduePoint {
        ResiduePoint::from_index(&self.field, i)
    }

    /// Minimal period of a point, `None` if it is strictly preperiodic.
    pub fn period(&self, point: &ResiduePoint) -> Option<usize> {
        let i = point.index();
        (self.tail[i] == 0).then_some(self.cycle[i])
    }

    /// Lengths of the distinct cycles, each listed once per cycle, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut counted = vec![false; self.len()];
        for i in 0..self.len() {
            if self.tail[i] == 0 && !counted[i] {
                let mut x = i;
                loop {
                    counted[x] = true;
                    x = self.image[x];
                    if x == i {
                        break;
                    }
                }
                out.push(self.cycle[i]);
            }
        }
        out.sort_unstable();
        out
    }
}

/// The functional graph of φ mod π, with the default size cap.
pub fn residue_dynamics(map: &HomogMap, place: &Place) -> Result<FunctionalGraph> {
    residue_dynamics_with_cap(map, place, DEFAULT_GRAPH_CAP)
}

pub fn residue_dynamics_with_cap(map: &HomogMap, place: &Place, cap: u64) -> Result<FunctionalGraph> {
    let k = place
        .residue_field()
        .ok_or_else(|| Error::InvalidArgument("residue dynamics needs a finite place".into()))?;
    let size = k.order().saturating_add(1);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(FunctionalGraph::from_residue_map(&ResidueMap::with_field(map, &k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn fl(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn graph(s: &str, p: u64, pi: &str) -> FunctionalGraph {
        let map = HomogMap::parse_affine(s, fl(p)).unwrap();
        residue_dynamics(&map, &Place::parse(pi, fl(p)).unwrap()).unwrap()
    }

    /// Oracle: iterate directly until a repeat.
    fn brute(image: &[usize], i: usize) -> (usize, usize) {
        let mut seen = vec![usize::MAX; image.len()];
        let (mut x, mut step) = (i, 0);
        while seen[x] == usize::MAX {
            seen[x] = step;
            x = image[x];
            step += 1;
        }
        (seen[x], step - seen[x])
    }

    #[test]
    fn squaring_mod_t_over_f2() {
        let g = graph("x^2", 2, "t");
        assert_eq!(g.len(), 3);
        for i in 0..3 {
            assert_eq!((g.image(i), g.tail(i), g.cycle_len(i)), (i, 0, 1));
        }
    }

    #[test]
    fn x2_plus_1_over_f2() {
        let g = graph("x^2+1", 2, "t");
        assert_eq!((g.image(0), g.image(1), g.image(2)), (1, 0, 2));
        assert_eq!(g.cycle_lengths(), vec![1, 2]);
    }

    #[test]
    fn squaring_on_p1_f5() {
        let g = graph("x^2", 5, "t+3");
        // 0, 1, ∞ fixed; 4 -> 1; 2 -> 4 and 3 -> 4.
        assert_eq!(g.len(), 6);
        assert_eq!(g.cycle_lengths(), vec![1, 1, 1]);
        assert_eq!((g.tail(4), g.tail(2), g.tail(3)), (1, 2, 2));
        assert_eq!(g.image(2), 4);
        assert_eq!(g.period(&g.point(4)), None);
        assert_eq!(g.period(&g.point(5)), Some(1));
    }

    #[test]
    fn matches_direct_iteration() {
        let map = HomogMap::parse_affine("(x^3+t)/(x^2+1)", fl(3)).unwrap();
        for pi in ["t", "t^2+1", "t^3+2*t+1"] {
            let g = residue_dynamics(&map, &Place::parse(pi, fl(3)).unwrap()).unwrap();
            let image: Vec<usize> = (0..g.len()).map(|i| g.image(i)).collect();
            for i in 0..g.len() {
                assert_eq!((g.tail(i), g.cycle_len(i)), brute(&image, i));
            }
        }
    }

    #[test]
    fn cap_and_infinite_place() {
        let map = HomogMap::parse_affine("x^2", fl(97)).unwrap();
        assert!(residue_dynamics(&map, &Place::Infinity).is_err());
        let pi = Place::parse("t", fl(97)).unwrap();
        assert!(matches!(
            residue_dynamics_with_cap(&map, &pi, 50),
            Err(Error::CapExceeded { size: 98, cap: 50 })
        ));
    }
}
