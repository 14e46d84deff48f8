use std::fmt;

use super::forms::{self, Form};
use crate::algebra::{factor, FpPoly, PrimeField};
use crate::error::{Error, Result};
use crate::funcfield::{Place, PlaceSet, RatFunc};
use crate::geometry::ProjPoint;

/// An endomorphism `[X : Y] -> [F(X,Y) : G(X,Y)]` of P¹ over F_p(t).
///
/// Only the normalized integral model is stored: the 2d+2 coefficients lie
/// in F_p[t], have joint gcd 1, and the first nonzero coefficient in the
/// order `F_0, ..., F_d, G_0, ..., G_d` is monic. Coefficients are indexed
/// by descending X-degree. This model is π-reduced at every finite place
/// simultaneously, so its resultant determines the bad places.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogMap {
    field: PrimeField,
    degree: usize,
    f: Form,
    g: Form,
    resultant: FpPoly,
}

impl HomogMap {
    /// Builds a map from rational-function coefficients; denominators are
    /// cleared and the content removed.
    pub fn new(field: PrimeField, f: Vec<RatFunc>, g: Vec<RatFunc>) -> Result<Self> {
        if f.len() != g.len() {
            return Err(Error::DegenerateMap(format!(
                "F has {} coefficients, G has {}",
                f.len(),
                g.len()
            )));
        }
        let lcm = f.iter().chain(&g).fold(FpPoly::one(field), |acc, c| {
            let gcd = acc.gcd(c.den());
            &acc * &c.den().div_exact(&gcd).expect("gcd divides")
        });
        let clear = |c: &RatFunc| c.num() * &lcm.div_exact(c.den()).expect("den divides lcm");
        Self::from_polys(f.iter().map(clear).collect(), g.iter().map(clear).collect())
    }

    /// Builds a map from polynomial coefficients in descending X-degree.
    pub fn from_polys(f: Vec<FpPoly>, g: Vec<FpPoly>) -> Result<Self> {
        if f.len() != g.len() {
            return Err(Error::DegenerateMap("F and G have different degrees".into()));
        }
        if f.len() < 2 {
            return Err(Error::DegenerateMap("degree must be at least 1".into()));
        }
        let field = f[0].field();
        if f.iter().chain(&g).any(|c| c.field() != field) {
            return Err(Error::DegenerateMap("mixed characteristics".into()));
        }
        let content = f.iter().chain(&g).fold(FpPoly::zero(field), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return Err(Error::DegenerateMap("F and G are both zero".into()));
        }
        let lead = f
            .iter()
            .chain(&g)
            .find(|c| !c.is_zero())
            .expect("content nonzero")
            .div_exact(&content)?
            .leading();
        let unit = field.inv(lead)?;
        let normalize = |c: &FpPoly| c.div_exact(&content).expect("content divides").scale(unit);
        let f: Form = f.iter().map(normalize).collect();
        let g: Form = g.iter().map(normalize).collect();
        let resultant = forms::resultant(&f, &g);
        if resultant.is_zero() {
            return Err(Error::DegenerateMap(
                "F and G share a common factor (resultant is zero)".into(),
            ));
        }
        Ok(HomogMap {
            field,
            degree: f.len() - 1,
            f,
            g,
            resultant,
        })
    }

    /// Homogenizes `num(x)/den(x)` (coefficients ascending in x) to degree
    /// `max(deg num, deg den)`.
    pub fn from_rational_function(num: &[RatFunc], den: &[RatFunc]) -> Result<Self> {
        let field = num.first().or(den.first()).ok_or(Error::DivisionByZero)?.field();
        let deg = |v: &[RatFunc]| v.iter().rposition(|c| !c.is_zero());
        let dn = deg(num);
        let dd = deg(den).ok_or(Error::DivisionByZero)?;
        let d = dn.unwrap_or(0).max(dd);
        let homogenize = |v: &[RatFunc]| -> Vec<RatFunc> {
            (0..=d)
                .map(|i| v.get(d - i).cloned().unwrap_or_else(|| RatFunc::zero(field)))
                .collect()
        };
        Self::new(field, homogenize(num), homogenize(den))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of F, descending X-degree.
    pub fn f(&self) -> &[FpPoly] {
        &self.f
    }

    /// Coefficients of G, descending X-degree.
    pub fn g(&self) -> &[FpPoly] {
        &self.g
    }

    /// Resultant of the normalized model; canonical up to the stored unit choice.
    pub fn resultant(&self) -> &FpPoly {
        &self.resultant
    }

    /// `[F(P) : G(P)]` in canonical coordinates.
    pub fn evaluate(&self, point: &ProjPoint) -> ProjPoint {
        let fx = forms::form_eval(&self.f, point.x(), point.y());
        let gx = forms::form_eval(&self.g, point.x(), point.y());
        ProjPoint::from_polys(fx, gx).expect("coprime forms never vanish together")
    }

    /// `φ^n(P)`.
    pub fn iterate(&self, point: &ProjPoint, n: usize) -> ProjPoint {
        (0..n).fold(point.clone(), |q, _| self.evaluate(&q))
    }

    /// Finite places dividing the resultant, i.e. places of bad reduction.
    pub fn bad_places(&self) -> PlaceSet {
        factor(&self.resultant)
            .expect("resultant nonzero")
            .factors
            .into_iter()
            .map(|(g, _)| Place::Finite(g))
            .collect()
    }

    /// `v_π(Res) = 0`. The infinite place is never of good reduction for
    /// this test; pass finite places only.
    pub fn has_good_reduction(&self, place: &Place) -> bool {
        match place {
            Place::Finite(pi) => !pi.divides(&self.resultant),
            Place::Infinity => false,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        // G = c Y^d and F has a nonzero X^d term.
        self.g[..self.degree].iter().all(|c| c.is_zero()) && !self.f[0].is_zero()
    }

    /// Coefficients as rational functions, for the chart computations.
    pub(crate) fn f_ratfunc(&self) -> Vec<RatFunc> {
        self.f.iter().cloned().map(RatFunc::from_poly).collect()
    }

    pub(crate) fn g_ratfunc(&self) -> Vec<RatFunc> {
        self.g.iter().cloned().map(RatFunc::from_poly).collect()
    }
}

pub(crate) fn fmt_form(f: &mut fmt::Formatter<'_>, coeffs: &[FpPoly]) -> fmt::Result {
    let d = coeffs.len() - 1;
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        let monomial = match (d - i, i) {
            (0, 0) => String::new(),
            (a, b) => {
                let part = |v: &str, e: usize| match e {
                    0 => String::new(),
                    1 => v.to_string(),
                    e => format!("{v}^{e}"),
                };
                [part("X", a), part("Y", b)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*")
            }
        };
        let coeff = if c.coeffs().iter().filter(|&&x| x != 0).count() > 1 {
            format!("({c})")
        } else {
            c.to_string()
        };
        match (coeff.as_str(), monomial.is_empty()) {
            (_, true) => write!(f, "{coeff}")?,
            ("1", false) => write!(f, "{monomial}")?,
            (_, false) => write!(f, "{coeff}*{monomial}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for HomogMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        fmt_form(f, &self.f)?;
        write!(f, " : ")?;
        fmt_form(f, &self.g)?;
        write!(f, "]")
    }
}

impl fmt::Debug for HomogMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogMap[F_{}]{self}", self.field.p())
    }
}
