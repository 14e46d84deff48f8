use std::fmt;

use crate::algebra::{FpPoly, PrimeField};
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;

/// Search-box measure of a point: max(deg x, deg y) in canonical coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Height(pub usize);

/// A point of P¹(F_p(t)) in canonical S-coprime coordinates for S = {∞}.
///
/// `x` and `y` are coprime polynomials, and the scaling is fixed by making
/// `y` monic, or `x = 1` when `y = 0`. Two points are equal exactly when
/// their coordinates are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    x: FpPoly,
    y: FpPoly,
}

impl ProjPoint {
    /// Canonical representative of `[x : y]` for polynomial coordinates.
    pub fn from_polys(x: FpPoly, y: FpPoly) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let field = x.field();
        if y.is_zero() {
            return Ok(Self::infinity(field));
        }
        if x.is_zero() {
            return Ok(Self::zero(field));
        }
        let g = x.gcd(&y);
        let (x, y) = if g.is_one() {
            (x, y)
        } else {
            (x.div_exact(&g)?, y.div_exact(&g)?)
        };
        let (lc, y) = y.monic_parts();
        let x = x.scale(field.inv(lc)?);
        Ok(ProjPoint { x, y })
    }

    pub fn zero(field: PrimeField) -> Self {
        ProjPoint {
            x: FpPoly::zero(field),
            y: FpPoly::one(field),
        }
    }

    pub fn infinity(field: PrimeField) -> Self {
        ProjPoint {
            x: FpPoly::one(field),
            y: FpPoly::zero(field),
        }
    }

    /// The affine point `[a : 1]`.
    pub fn affine(a: FpPoly) -> Self {
        let y = FpPoly::one(a.field());
        ProjPoint { x: a, y }
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::affine(FpPoly::constant(field, c))
    }

    pub fn x(&self) -> &FpPoly {
        &self.x
    }

    pub fn y(&self) -> &FpPoly {
        &self.y
    }

    pub fn field(&self) -> PrimeField {
        self.x.field()
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    pub fn height(&self) -> Height {
        Height(self.x.degree_or_zero().max(self.y.degree_or_zero()))
    }

    /// Affine coordinate x/y, `None` at infinity.
    pub fn affine_value(&self) -> Option<RatFunc> {
        if self.is_infinity() {
            None
        } else {
            Some(RatFunc::new(self.x.clone(), self.y.clone()).expect("y nonzero"))
        }
    }

    /// `[x : y]`, `x/y`, a bare polynomial or `inf`. Coordinates may be
    /// rational functions; they are cleared to canonical form.
    pub fn parse(s: &str, field: PrimeField) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Self::infinity(field));
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let (a, b) = inner
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected [x : y], found {s:?}")))?;
            return normalize(&RatFunc::parse(a, field)?, &RatFunc::parse(b, field)?);
        }
        normalize(&RatFunc::parse(s, field)?, &RatFunc::one(field))
    }
}

/// Clears denominators, removes the gcd and applies the canonical unit scaling.
pub fn normalize(a: &RatFunc, b: &RatFunc) -> Result<ProjPoint> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let x = a.num() * b.den();
    let y = b.num() * a.den();
    ProjPoint::from_polys(x, y)
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.x, self.y)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Monic polynomials of degree exactly `k`, ascending.
pub(crate) fn monic_of_degree(field: PrimeField, k: usize) -> impl Iterator<Item = FpPoly> {
    let lead = FpPoly::monomial(field, 1, k);
    (0..(field.p() as u64).pow(k as u32)).map(move |i| &FpPoly::from_index(field, i) + &lead)
}

/// Every point of height at most `bound`, each once.
///
/// Points `[x : y]` are listed by `y` ascending (monic, degree <= bound),
/// then by `x` ascending among polynomials coprime to `y`; `[1 : 0]` comes
/// last.
pub fn enumerate_points(field: PrimeField, bound: Height) -> Vec<ProjPoint> {
    let xs: Vec<FpPoly> = (0..(field.p() as u64).pow(bound.0 as u32 + 1))
        .map(|i| FpPoly::from_index(field, i))
        .collect();
    let mut out = Vec::new();
    for k in 0..=bound.0 {
        for y in monic_of_degree(field, k) {
            for x in &xs {
                if x.gcd(&y).is_one() {
                    out.push(ProjPoint {
                        x: x.clone(),
                        y: y.clone(),
                    });
                }
            }
        }
    }
    out.push(ProjPoint::infinity(field));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn rf(s: &str, p: u64) -> RatFunc {
        RatFunc::parse(s, f(p)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let p = normalize(&rf("t^2+t", 2), &rf("t", 2)).unwrap();
        assert_eq!(p.to_string(), "[t+1 : 1]");
        let p = normalize(&rf("1/t", 5), &rf("1", 5)).unwrap();
        assert_eq!(p.to_string(), "[1 : t]");
        let p = normalize(&rf("0", 7), &rf("5", 7)).unwrap();
        assert_eq!(p, ProjPoint::zero(f(7)));
        assert_eq!(normalize(&rf("0", 7), &rf("0", 7)), Err(Error::ZeroPoint));
    }

    #[test]
    fn scaling_is_canonical() {
        let fl = f(5);
        let a = ProjPoint::from_polys(FpPoly::new(fl, vec![1, 2]), FpPoly::new(fl, vec![0, 3])).unwrap();
        let b = ProjPoint::from_polys(FpPoly::new(fl, vec![2, 4]), FpPoly::new(fl, vec![0, 1])).unwrap();
        assert_eq!(a, b);
        assert!(a.y().is_monic());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_points(f(2), Height(0)).len(), 3);
        assert_eq!(enumerate_points(f(3), Height(0)).len(), 4);
        assert_eq!(enumerate_points(f(2), Height(1)).len(), 9);
    }

    /// Independent count: all nonzero pairs of degree <= B, canonicalized and deduplicated.
    #[test]
    fn enumeration_is_complete_and_duplicate_free() {
        for (p, b) in [(2u64, 2usize), (3, 1), (2, 3)] {
            let fl = f(p);
            let q = p.pow(b as u32 + 1);
            let mut brute = HashSet::new();
            for i in 0..q {
                for j in 0..q {
                    if i == 0 && j == 0 {
                        continue;
                    }
                    brute.insert(ProjPoint::from_polys(FpPoly::from_index(fl, i), FpPoly::from_index(fl, j)).unwrap());
                }
            }
            let listed = enumerate_points(fl, Height(b));
            let set: HashSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len());
            assert_eq!(set, brute);
        }
    }

    #[test]
    fn parse_forms() {
        let fl = f(3);
        assert_eq!(
            ProjPoint::parse("[t : 1]", fl).unwrap(),
            ProjPoint::affine(FpPoly::t(fl))
        );
        assert_eq!(ProjPoint::parse("inf", fl).unwrap(), ProjPoint::infinity(fl));
        assert_eq!(ProjPoint::parse("[2 : 0]", fl).unwrap(), ProjPoint::infinity(fl));
        assert_eq!(ProjPoint::parse("1/t", fl).unwrap().to_string(), "[1 : t]");
        assert!(ProjPoint::parse("[0 : 0]", fl).is_err());
        assert!(ProjPoint::parse("[t, 1]", fl).is_err());
    }
}
