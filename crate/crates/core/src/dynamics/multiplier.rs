//! Multipliers `(φ^n)'(P)` via the chain rule in affine charts.
//!
//! A point off infinity uses the chart x; the point at infinity uses the
//! swapped chart w = 1/x, which amounts to conjugating by x -> 1/x. The
//! target chart of each step is the source chart of the next, so for a
//! cycle the product is the derivative of φ^n in one chart at P.

use super::{HomogMap, ResidueMap};
use crate::algebra::univariate::{self as uni, Field};
use crate::error::{Error, Result};
use crate::funcfield::{RatFunc, RationalFunctionField};
use crate::geometry::{ProjPoint, ResiduePoint};

/// Derivative at one orbit step. `f`, `g` are descending form coefficients,
/// `source` is the affine value of the point (`None` at infinity) and
/// `target_at_infinity` says whether its image is the point at infinity.
fn chart_derivative<K: Field>(
    k: &K,
    f: &[K::Elem],
    g: &[K::Elem],
    source: Option<&K::Elem>,
    target_at_infinity: bool,
) -> Result<K::Elem> {
    // In the x chart A(s) = F(s, 1) has ascending coefficients f reversed;
    // in the w chart A(s) = F(1, s) has them in stored order.
    let (a, b, s0) = match source {
        Some(x) => (
            f.iter().rev().cloned().collect::<Vec<_>>(),
            g.iter().rev().cloned().collect::<Vec<_>>(),
            x.clone(),
        ),
        None => (f.to_vec(), g.to_vec(), k.zero()),
    };
    let (num, den) = if target_at_infinity { (b, a) } else { (a, b) };
    let num = uni::trim(k, num);
    let den = uni::trim(k, den);
    let n0 = uni::eval(k, &num, &s0);
    let d0 = uni::eval(k, &den, &s0);
    let n1 = uni::eval(k, &uni::derivative(k, &num), &s0);
    let d1 = uni::eval(k, &uni::derivative(k, &den), &s0);
    let top = k.sub(&k.mul(&n1, &d0), &k.mul(&n0, &d1));
    let bottom = k.mul(&d0, &d0);
    k.div(&top, &bottom)
        .map_err(|_| Error::InvalidArgument("orbit step leaves the chosen chart".into()))
}

/// Chain-rule product along `orbit[0] -> orbit[1] -> ... -> orbit[n]`,
/// points given by affine value or `None` for infinity.
pub(crate) fn chain_multiplier<K: Field>(
    k: &K,
    f: &[K::Elem],
    g: &[K::Elem],
    orbit: &[Option<K::Elem>],
) -> Result<K::Elem> {
    let mut acc = k.one();
    for step in orbit.windows(2) {
        let der = chart_derivative(k, f, g, step[0].as_ref(), step[1].is_none())?;
        acc = k.mul(&acc, &der);
    }
    Ok(acc)
}

impl HomogMap {
    /// `(φ^n)'(P)` as an element of F_p(t). For a point of exact period
    /// dividing n this is the multiplier of its cycle; otherwise it is the
    /// derivative of φ^n between the natural charts at P and φ^n(P).
    pub fn multiplier(&self, point: &ProjPoint, n: usize) -> RatFunc {
        let k = RationalFunctionField { field: self.field() };
        let mut orbit = Vec::with_capacity(n + 1);
        let mut cur = point.clone();
        orbit.push(cur.affine_value());
        for _ in 0..n {
            cur = self.evaluate(&cur);
            orbit.push(cur.affine_value());
        }
        chain_multiplier(&k, &self.f_ratfunc(), &self.g_ratfunc(), &orbit)
            .expect("evaluation lands in the chosen chart")
    }
}

impl ResidueMap {
    /// `(φ̃^n)'(P̃)` over k(π).
    pub fn multiplier(&self, point: &ResiduePoint, n: usize) -> crate::algebra::FpPoly {
        let k = self.field();
        let mut orbit = Vec::with_capacity(n + 1);
        let mut cur = point.clone();
        let value = |p: &ResiduePoint| (!p.is_infinity()).then(|| p.x().clone());
        orbit.push(value(&cur));
        for _ in 0..n {
            cur = self.evaluate(&cur);
            orbit.push(value(&cur));
        }
        chain_multiplier(k, self.f(), self.g(), &orbit).expect("evaluation lands in the chosen chart")
    }
}
