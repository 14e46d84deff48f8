use super::ProjPoint;
use crate::error::{Error, Result};
use crate::funcfield::{poly_valuation, valuation, Place, RatFunc, Valuation};

fn min_valuation(a: &RatFunc, b: &RatFunc, place: &Place) -> Result<i64> {
    valuation(a, place)
        .min(valuation(b, place))
        .finite()
        .ok_or(Error::ZeroPoint)
}

/// π-adic logarithmic distance from arbitrary homogeneous coordinates:
///
/// `v(x1 y2 - x2 y1) - min(v(x1), v(y1)) - min(v(x2), v(y2))`.
///
/// The value does not depend on the representatives chosen.
pub fn log_distance_coords(p1: (&RatFunc, &RatFunc), p2: (&RatFunc, &RatFunc), place: &Place) -> Result<i64> {
    let cross = p1.0.mul(p2.1).sub(&p2.0.mul(p1.1));
    let v = match valuation(&cross, place) {
        Valuation::Finite(v) => v,
        Valuation::PosInfinity => {
            return Err(
                if p1.0.is_zero() && p1.1.is_zero() || p2.0.is_zero() && p2.1.is_zero() {
                    Error::ZeroPoint
                } else {
                    Error::EqualPoints
                },
            )
        }
    };
    Ok(v - min_valuation(p1.0, p1.1, place)? - min_valuation(p2.0, p2.1, place)?)
}

/// δ_v(P, Q) for distinct points. Nonnegative at finite places, where the
/// canonical coordinates are coprime and the min-terms vanish.
pub fn log_distance(a: &ProjPoint, b: &ProjPoint, place: &Place) -> Result<i64> {
    let cross = &(a.x() * b.y()) - &(b.x() * a.y());
    if cross.is_zero() {
        return Err(Error::EqualPoints);
    }
    let v = poly_valuation(&cross, place).expect("nonzero");
    Ok(match place {
        Place::Finite(_) => v,
        Place::Infinity => {
            let m = |pt: &ProjPoint| {
                let vx = poly_valuation(pt.x(), place);
                let vy = poly_valuation(pt.y(), place);
                match (vx, vy) {
                    (Some(a), Some(b)) => a.min(b),
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => unreachable!("canonical points are nonzero"),
                }
            };
            v - m(a) - m(b)
        }
    })
}

/// The polynomial x1 y2 - x2 y1 of two points' canonical coordinates; its
/// irreducible factors are the finite places where the points collide.
pub fn cross_product(a: &ProjPoint, b: &ProjPoint) -> crate::algebra::FpPoly {
    &(a.x() * b.y()) - &(b.x() * a.y())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn pt(s: &str, p: u64) -> ProjPoint {
        ProjPoint::parse(s, f(p)).unwrap()
    }

    fn place(s: &str, p: u64) -> Place {
        Place::parse(s, f(p)).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(log_distance(&pt("[0:1]", 2), &pt("[t:1]", 2), &place("t", 2)), Ok(1));
        assert_eq!(log_distance(&pt("[1:0]", 2), &pt("[0:1]", 2), &place("t", 2)), Ok(0));
        assert_eq!(
            log_distance(&pt("[t:1]", 2), &pt("[t+1:1]", 2), &Place::Infinity),
            Ok(2)
        );
        assert_eq!(
            log_distance(&pt("[t:1]", 2), &pt("[t:1]", 2), &Place::Infinity),
            Err(Error::EqualPoints)
        );
    }

    #[test]
    fn coordinate_form_agrees() {
        let fl = f(3);
        let a = RatFunc::parse("t^2+1/t", fl).unwrap();
        let b = RatFunc::parse("2/t", fl).unwrap();
        let c = RatFunc::parse("t+2", fl).unwrap();
        let d = RatFunc::parse("t^2", fl).unwrap();
        let pa = super::super::normalize(&a, &b).unwrap();
        let pb = super::super::normalize(&c, &d).unwrap();
        for place in [place("t", 3), place("t+2", 3), place("t^2+1", 3), Place::Infinity] {
            assert_eq!(
                log_distance_coords((&a, &b), (&c, &d), &place).unwrap(),
                log_distance(&pa, &pb, &place).unwrap()
            );
        }
    }
}
