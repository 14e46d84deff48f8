use super::orbit::{default_max_height, iterate_orbit};
use crate::dynamics::HomogMap;
use crate::geometry::{enumerate_points, Height, ProjPoint};

/// Every point of height at most `bound` whose orbit returns to it within
/// `max_steps` evaluations, with its minimal period. Orbits leaving height
/// `8·(bound + 1)` are treated as infinite. Points come in enumeration order.
pub fn find_periodic_points(map: &HomogMap, bound: usize, max_steps: usize) -> Vec<(ProjPoint, usize)> {
    find_periodic_points_capped(map, bound, max_steps, default_max_height(bound))
}

pub fn find_periodic_points_capped(
    map: &HomogMap,
    bound: usize,
    max_steps: usize,
    max_height: usize,
) -> Vec<(ProjPoint, usize)> {
    enumerate_points(map.field(), Height(bound))
        .into_iter()
        .filter_map(|p| {
            let report = iterate_orbit(map, &p, max_steps, max_height);
            report.is_periodic().then(|| (p, report.cycle.expect("finite")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn fl(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn map(s: &str, p: u64) -> HomogMap {
        HomogMap::parse_affine(s, fl(p)).unwrap()
    }

    fn pt(s: &str, p: u64) -> ProjPoint {
        ProjPoint::parse(s, fl(p)).unwrap()
    }

    #[test]
    fn squaring_over_f2() {
        let found = find_periodic_points(&map("x^2", 2), 2, 256);
        assert_eq!(found, vec![(pt("0", 2), 1), (pt("1", 2), 1), (pt("inf", 2), 1)]);
    }

    #[test]
    fn inversion_square_over_f2() {
        let found = find_periodic_points(&map("1/x^2", 2), 2, 256);
        assert!(found.contains(&(pt("0", 2), 2)));
        assert!(found.contains(&(pt("inf", 2), 2)));
        assert!(found.contains(&(pt("1", 2), 1)));
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn polynomial_maps_fix_infinity() {
        let found = find_periodic_points(&map("x^2+t", 2), 3, 256);
        assert_eq!(found, vec![(pt("inf", 2), 1)]);
    }
}
