use std::fmt;

use super::ProjPoint;
use crate::algebra::{FpPoly, ResidueField};
use crate::error::Result;
use crate::funcfield::Place;

/// A point of P¹(k(π)) scaled to `[x : 1]` or `[1 : 0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResiduePoint {
    field: ResidueField,
    x: FpPoly,
    y: FpPoly,
}

impl ResiduePoint {
    /// Canonical point from coordinates in k(π), not both zero.
    pub fn new(field: &ResidueField, x: &FpPoly, y: &FpPoly) -> Result<Self> {
        let x = field.reduce(x);
        let y = field.reduce(y);
        if y.is_zero() {
            if x.is_zero() {
                return Err(crate::Error::ZeroPoint);
            }
            return Ok(Self::infinity(field));
        }
        let x = field.mul(&x, &field.inv(&y)?);
        Ok(ResiduePoint {
            field: field.clone(),
            x,
            y: field.one(),
        })
    }

    pub fn affine(field: &ResidueField, x: FpPoly) -> Self {
        ResiduePoint {
            field: field.clone(),
            x: field.reduce(&x),
            y: field.one(),
        }
    }

    pub fn infinity(field: &ResidueField) -> Self {
        ResiduePoint {
            field: field.clone(),
            x: field.one(),
            y: field.zero(),
        }
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn x(&self) -> &FpPoly {
        &self.x
    }

    pub fn y(&self) -> &FpPoly {
        &self.y
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// Position in `0..=q`: affine points by the base-p digits of x, and
    /// infinity at q = |k(π)|.
    pub fn index(&self) -> usize {
        if self.is_infinity() {
            self.field.order() as usize
        } else {
            self.x.to_index() as usize
        }
    }

    pub fn from_index(field: &ResidueField, i: usize) -> Self {
        if i as u64 == field.order() {
            Self::infinity(field)
        } else {
            Self::affine(field, field.element_at(i as u64))
        }
    }
}

impl fmt::Display for ResiduePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.x, self.y)
    }
}

impl fmt::Debug for ResiduePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod ({})", self.field.modulus())
    }
}

/// Coordinate-wise reduction of canonical coordinates modulo π. Well
/// defined because π never divides both coordinates.
pub fn reduce_point(point: &ProjPoint, field: &ResidueField) -> ResiduePoint {
    ResiduePoint::new(field, point.x(), point.y()).expect("coprime coordinates do not both vanish mod π")
}

/// [`reduce_point`] for a finite place; `None` at infinity.
pub fn reduce_point_at(point: &ProjPoint, place: &Place) -> Option<ResiduePoint> {
    place.residue_field().map(|k| reduce_point(point, &k))
}
