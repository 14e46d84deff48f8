use std::collections::BTreeSet;
use std::fmt;

use super::RatFunc;
use crate::algebra::{factor, is_irreducible, FpPoly, PrimeField, ResidueField};
use crate::error::{Error, Result};

/// A place of F_p(t): a monic irreducible π, or the place at infinity
/// attached to 1/t.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(FpPoly),
    Infinity,
}

impl Place {
    pub fn finite(pi: FpPoly) -> Result<Self> {
        if pi.is_monic() && pi.degree().unwrap_or(0) >= 1 && is_irreducible(&pi)? {
            Ok(Place::Finite(pi))
        } else {
            Err(Error::NotIrreducible(pi.to_string()))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// The monic irreducible of a finite place.
    pub fn modulus(&self) -> Option<&FpPoly> {
        match self {
            Place::Finite(pi) => Some(pi),
            Place::Infinity => None,
        }
    }

    /// Degree of the place; the infinite place has degree 1.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(pi) => pi.degree().expect("nonconstant"),
            Place::Infinity => 1,
        }
    }

    pub fn residue_field(&self) -> Option<ResidueField> {
        self.modulus().map(|pi| ResidueField::new_unchecked(pi.clone()))
    }

    /// `inf`, or a monic irreducible in the polynomial grammar.
    pub fn parse(s: &str, field: PrimeField) -> Result<Self> {
        if s.trim() == "inf" {
            return Ok(Place::Infinity);
        }
        Place::finite(FpPoly::parse(s, field)?)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(pi) => write!(f, "{pi}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Valuation codomain: an integer, or +∞ for the zero element.
///
/// Only comparisons are supported on +∞; use [`Valuation::finite`] to do
/// arithmetic on the integer part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    PosInfinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::PosInfinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::PosInfinity
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::PosInfinity => write!(f, "+inf"),
        }
    }
}

/// Valuation of a nonzero polynomial; `None` for zero.
pub fn poly_valuation(f: &FpPoly, place: &Place) -> Option<i64> {
    if f.is_zero() {
        return None;
    }
    Some(match place {
        Place::Finite(pi) => f.multiplicity(pi) as i64,
        Place::Infinity => -(f.degree().unwrap() as i64),
    })
}

pub fn valuation(x: &RatFunc, place: &Place) -> Valuation {
    if x.is_zero() {
        return Valuation::PosInfinity;
    }
    let v = match place {
        Place::Finite(pi) => x.num().multiplicity(pi) as i64 - x.den().multiplicity(pi) as i64,
        Place::Infinity => x.den().degree().unwrap() as i64 - x.num().degree().unwrap() as i64,
    };
    Valuation::Finite(v)
}

impl RatFunc {
    pub fn valuation(&self, place: &Place) -> Valuation {
        valuation(self, place)
    }
}

/// Finite places where a nonzero element has nonzero valuation.
pub fn finite_support(x: &RatFunc) -> Result<Vec<Place>> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out: Vec<Place> = factor(x.num())?
        .factors
        .into_iter()
        .chain(factor(x.den())?.factors)
        .map(|(g, _)| Place::Finite(g))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Checks `sum_π deg(π) v_π(x) + v_∞(x) = 0`.
pub fn product_formula_check(x: &RatFunc) -> Result<bool> {
    let mut total = 0i64;
    for place in finite_support(x)? {
        let v = valuation(x, &place).finite().expect("x nonzero");
        total += place.degree() as i64 * v;
    }
    total += valuation(x, &Place::Infinity).finite().expect("x nonzero");
    Ok(total == 0)
}

/// A finite set of places.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PlaceSet(BTreeSet<Place>);

impl PlaceSet {
    pub fn new() -> Self {
        PlaceSet(BTreeSet::new())
    }

    /// The standard S = {∞}.
    pub fn infinity() -> Self {
        PlaceSet(BTreeSet::from([Place::Infinity]))
    }

    pub fn insert(&mut self, place: Place) -> bool {
        self.0.insert(place)
    }

    pub fn contains(&self, place: &Place) -> bool {
        self.0.contains(place)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Place> {
        self.0.iter()
    }
}

impl FromIterator<Place> for PlaceSet {
    fn from_iter<I: IntoIterator<Item = Place>>(iter: I) -> Self {
        PlaceSet(iter.into_iter().collect())
    }
}

impl IntoIterator for PlaceSet {
    type Item = Place;
    type IntoIter = std::collections::btree_set::IntoIter<Place>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, place) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{place}")?;
        }
        write!(f, "}}")
    }
}

/// v_π(x) >= 0 at every place outside S.
pub fn is_s_integer(x: &RatFunc, s: &PlaceSet) -> bool {
    if x.is_zero() {
        return true;
    }
    if !s.contains(&Place::Infinity) && valuation(x, &Place::Infinity) < Valuation::Finite(0) {
        return false;
    }
    // Negative finite valuations come only from the denominator.
    factor(x.den())
        .expect("denominator nonzero")
        .factors
        .into_iter()
        .all(|(g, _)| s.contains(&Place::Finite(g)))
}

/// v_π(x) = 0 at every place outside S.
pub fn is_s_unit(x: &RatFunc, s: &PlaceSet) -> bool {
    if x.is_zero() {
        return false;
    }
    if !s.contains(&Place::Infinity) && valuation(x, &Place::Infinity) != Valuation::Finite(0) {
        return false;
    }
    finite_support(x)
        .expect("x nonzero")
        .iter()
        .all(|place| s.contains(place))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn rf(s: &str, p: u64) -> RatFunc {
        RatFunc::parse(s, f(p)).unwrap()
    }

    fn place(s: &str, p: u64) -> Place {
        Place::parse(s, f(p)).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(rf("t^3/t+1", 2).valuation(&place("t", 2)), Valuation::Finite(3));
        assert_eq!(rf("t^2", 2).valuation(&Place::Infinity), Valuation::Finite(-2));
        assert_eq!(rf("t/t+1", 2).valuation(&place("t+1", 2)), Valuation::Finite(-1));
        assert_eq!(rf("0", 2).valuation(&place("t", 2)), Valuation::PosInfinity);
    }

    #[test]
    fn infinity_sorts_above_integers() {
        assert!(Valuation::PosInfinity > Valuation::Finite(i64::MAX));
        assert!(Valuation::Finite(-3) < Valuation::Finite(0));
    }

    #[test]
    fn product_formula_examples() {
        assert_eq!(product_formula_check(&rf("t/t+1", 2)), Ok(true));
        assert_eq!(product_formula_check(&rf("4", 5)), Ok(true));
        assert_eq!(product_formula_check(&rf("t^2+t+1/t", 2)), Ok(true));
        assert_eq!(product_formula_check(&rf("0", 5)), Err(Error::ZeroInput));
    }

    #[test]
    fn s_integers() {
        let s = PlaceSet::infinity();
        assert!(is_s_integer(&rf("t^2+1", 2), &s));
        assert!(!is_s_integer(&rf("1/t", 2), &s));
        let mut s2 = PlaceSet::infinity();
        s2.insert(place("t", 2));
        assert!(is_s_integer(&rf("1/t", 2), &s2));
        // Without ∞ in S, a polynomial of positive degree is not integral there.
        assert!(!is_s_integer(&rf("t", 2), &PlaceSet::from_iter([place("t", 2)])));
    }

    #[test]
    fn s_units() {
        let s = PlaceSet::infinity();
        assert!(is_s_unit(&rf("2", 3), &s));
        assert!(is_s_unit(&rf("1", 2), &s));
        assert!(!is_s_unit(&rf("t", 2), &s));
        assert!(!is_s_unit(&rf("0", 2), &s));
        let units: Vec<u32> = (0..2).filter(|&c| is_s_unit(&RatFunc::constant(f(2), c), &s)).collect();
        assert_eq!(units, vec![1]);
    }

    #[test]
    fn place_validation() {
        assert!(Place::parse("t^2+1", f(2)).is_err());
        assert!(Place::parse("2*t", f(3)).is_err());
        assert_eq!(Place::parse(" inf ", f(3)).unwrap(), Place::Infinity);
        assert_eq!(place("t^2+t+1", 2).degree(), 2);
    }
}
