use std::fmt;

use super::HomogMap;
use crate::algebra::univariate as uni;
use crate::algebra::{FpPoly, ResidueField};
use crate::error::{Error, Result};
use crate::funcfield::Place;
use crate::geometry::ResiduePoint;

/// The reduction of a map modulo a finite place, with any common
/// homogeneous factor of the reduced forms cancelled.
#[derive(Clone, PartialEq, Eq)]
pub struct ResidueMap {
    field: ResidueField,
    original_degree: usize,
    degree: usize,
    f: Vec<FpPoly>,
    g: Vec<FpPoly>,
}

/// Converts descending form coefficients to the ascending dehomogenization F(x, 1).
fn dehomogenize(k: &ResidueField, form: &[FpPoly]) -> Vec<FpPoly> {
    uni::trim(k, form.iter().rev().cloned().collect())
}

/// Rehomogenizes an ascending polynomial of degree <= d to descending form of degree d.
fn homogenize(k: &ResidueField, poly: &[FpPoly], d: usize) -> Vec<FpPoly> {
    (0..=d)
        .map(|i| poly.get(d - i).cloned().unwrap_or_else(|| k.zero()))
        .collect()
}

impl ResidueMap {
    pub fn new(map: &HomogMap, place: &Place) -> Result<Self> {
        let k = place
            .residue_field()
            .ok_or_else(|| Error::InvalidArgument("reduction needs a finite place".into()))?;
        Ok(Self::with_field(map, &k))
    }

    pub fn with_field(map: &HomogMap, k: &ResidueField) -> Self {
        let d = map.degree();
        let f: Vec<FpPoly> = map.f().iter().map(|c| k.reduce(c)).collect();
        let g: Vec<FpPoly> = map.g().iter().map(|c| k.reduce(c)).collect();
        let fu = dehomogenize(k, &f);
        let gu = dehomogenize(k, &g);
        let (degree, f, g) = if fu.is_empty() {
            (0, vec![k.zero()], vec![k.one()])
        } else if gu.is_empty() {
            (0, vec![k.one()], vec![k.zero()])
        } else {
            // Common factor is Y^e times the homogenized gcd of F(x,1), G(x,1).
            let e = (d + 1 - fu.len()).min(d + 1 - gu.len());
            let h = uni::gcd(k, &fu, &gu);
            let common = e + h.len() - 1;
            let new_d = d - common;
            let fq = uni::divrem(k, &fu, &h).expect("h nonzero").0;
            let gq = uni::divrem(k, &gu, &h).expect("h nonzero").0;
            (new_d, homogenize(k, &fq, new_d), homogenize(k, &gq, new_d))
        };
        ResidueMap {
            field: k.clone(),
            original_degree: d,
            degree,
            f,
            g,
        }
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    /// Degree d' after cancellation.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// d' = d.
    pub fn has_full_degree(&self) -> bool {
        self.degree == self.original_degree
    }

    pub fn f(&self) -> &[FpPoly] {
        &self.f
    }

    pub fn g(&self) -> &[FpPoly] {
        &self.g
    }

    fn eval_form(&self, form: &[FpPoly], x: &FpPoly, y: &FpPoly) -> FpPoly {
        // Horner in x: acc = acc*x + c_i*y^i.
        let k = &self.field;
        let mut acc = k.zero();
        let mut ypow = k.one();
        for c in form {
            acc = k.add(&k.mul(&acc, x), &k.mul(c, &ypow));
            ypow = k.mul(&ypow, y);
        }
        acc
    }

    pub fn evaluate(&self, point: &ResiduePoint) -> ResiduePoint {
        let fx = self.eval_form(&self.f, point.x(), point.y());
        let gx = self.eval_form(&self.g, point.x(), point.y());
        ResiduePoint::new(&self.field, &fx, &gx).expect("reduced forms are coprime")
    }

    /// Image of every point of P¹(k(π)) by index, infinity last.
    pub fn image_table(&self) -> Vec<usize> {
        let q = self.field.order() as usize;
        (0..=q)
            .map(|i| self.evaluate(&ResiduePoint::from_index(&self.field, i)).index())
            .collect()
    }
}

impl fmt::Display for ResidueMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        super::map::fmt_form(f, &self.f)?;
        write!(f, " : ")?;
        super::map::fmt_form(f, &self.g)?;
        write!(f, "] mod ({})", self.field.modulus())
    }
}

impl fmt::Debug for ResidueMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl HomogMap {
    pub fn reduce_map(&self, place: &Place) -> Result<ResidueMap> {
        ResidueMap::new(self, place)
    }
}
