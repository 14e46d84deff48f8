use std::fmt;

use super::forms::{form_add, form_mul, form_pow, form_scale};
use super::HomogMap;
use crate::algebra::{FpPoly, PrimeField};
use crate::error::{Error, Result};
use crate::geometry::ProjPoint;

/// A matrix `[[a, b], [c, d]]` over F_p[t] with determinant in F_p*,
/// acting by `[X : Y] -> [aX + bY : cX + dY]`. Represents an element of
/// PGL₂(R_S) for S = {∞}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mobius {
    a: FpPoly,
    b: FpPoly,
    c: FpPoly,
    d: FpPoly,
}

impl Mobius {
    pub fn new(a: FpPoly, b: FpPoly, c: FpPoly, d: FpPoly) -> Result<Self> {
        let m = Mobius { a, b, c, d };
        if !m.det().is_unit() {
            return Err(Error::NonUnitDeterminant);
        }
        Ok(m)
    }

    pub fn identity(field: PrimeField) -> Self {
        Mobius {
            a: FpPoly::one(field),
            b: FpPoly::zero(field),
            c: FpPoly::zero(field),
            d: FpPoly::one(field),
        }
    }

    /// x -> x + s.
    pub fn translation(s: FpPoly) -> Self {
        let field = s.field();
        Mobius {
            a: FpPoly::one(field),
            b: s,
            c: FpPoly::zero(field),
            d: FpPoly::one(field),
        }
    }

    /// x -> 1/x.
    pub fn inversion(field: PrimeField) -> Self {
        Mobius {
            a: FpPoly::zero(field),
            b: FpPoly::one(field),
            c: FpPoly::one(field),
            d: FpPoly::zero(field),
        }
    }

    /// x -> u x for a unit u.
    pub fn scaling(field: PrimeField, u: u32) -> Result<Self> {
        Self::new(
            FpPoly::constant(field, u),
            FpPoly::zero(field),
            FpPoly::zero(field),
            FpPoly::one(field),
        )
    }

    /// Some matrix sending [0 : 1] to `point`; its second column is the
    /// point's coordinates, completed by a Bézout relation.
    pub fn sending_zero_to(point: &ProjPoint) -> Self {
        let (x, y) = (point.x(), point.y());
        // s x + u y = 1, so det [[u, x], [-s, y]] = u y + s x = 1.
        let (_, s, u) = x.ext_gcd(y);
        Mobius {
            a: u,
            b: x.clone(),
            c: -&s,
            d: y.clone(),
        }
    }

    pub fn entries(&self) -> [&FpPoly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> FpPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Matrix product `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius {
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
        }
    }

    pub fn inverse(&self) -> Mobius {
        let field = self.a.field();
        let inv = field.inv(self.det().leading()).expect("unit determinant");
        Mobius {
            a: self.d.scale(inv),
            b: (-&self.b).scale(inv),
            c: (-&self.c).scale(inv),
            d: self.a.scale(inv),
        }
    }

    pub fn apply(&self, point: &ProjPoint) -> ProjPoint {
        let x = &(&self.a * point.x()) + &(&self.b * point.y());
        let y = &(&self.c * point.x()) + &(&self.d * point.y());
        ProjPoint::from_polys(x, y).expect("invertible matrix")
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mobius{self}")
    }
}

impl HomogMap {
    /// `M⁻¹ ∘ φ ∘ M`.
    pub fn conjugate(&self, m: &Mobius) -> Result<HomogMap> {
        if !m.det().is_unit() {
            return Err(Error::NonUnitDeterminant);
        }
        let d = self.degree();
        let l1 = vec![m.a.clone(), m.b.clone()];
        let l2 = vec![m.c.clone(), m.d.clone()];
        let p1: Vec<_> = (0..=d).map(|k| form_pow(&l1, k)).collect();
        let p2: Vec<_> = (0..=d).map(|k| form_pow(&l2, k)).collect();
        let substitute = |coeffs: &[FpPoly]| {
            let zero = vec![FpPoly::zero(self.field()); d + 1];
            coeffs.iter().enumerate().fold(zero, |acc, (i, c)| {
                form_add(&acc, &form_scale(&form_mul(&p1[d - i], &p2[i]), c))
            })
        };
        let fm = substitute(self.f());
        let gm = substitute(self.g());
        // The adjugate represents M⁻¹ projectively.
        let f_new = form_add(&form_scale(&fm, &m.d), &form_scale(&gm, &-&m.b));
        let g_new = form_add(&form_scale(&fm, &-&m.c), &form_scale(&gm, &m.a));
        HomogMap::from_polys(f_new, g_new)
    }
}
