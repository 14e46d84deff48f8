use std::fmt;

use crate::algebra::{Field, FpPoly, PrimeField};
use crate::error::{Error, Result};

/// An element of K = F_p(t) in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: FpPoly,
    den: FpPoly,
}

impl RatFunc {
    pub fn new(num: FpPoly, den: FpPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = num.field();
        if num.is_zero() {
            return Ok(Self::zero(field));
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let (lc, den) = den.monic_parts();
        let num = num.scale(field.inv(lc)?);
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(num: FpPoly) -> Self {
        let den = FpPoly::one(num.field());
        RatFunc { num, den }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::from_poly(FpPoly::zero(field))
    }

    pub fn one(field: PrimeField) -> Self {
        Self::from_poly(FpPoly::one(field))
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::from_poly(FpPoly::constant(field, c))
    }

    pub fn t(field: PrimeField) -> Self {
        Self::from_poly(FpPoly::t(field))
    }

    pub fn num(&self) -> &FpPoly {
        &self.num
    }

    pub fn den(&self) -> &FpPoly {
        &self.den
    }

    pub fn field(&self) -> PrimeField {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone()).expect("den nonzero");
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("den nonzero")
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("den nonzero")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e as u64),
            den: self.den.pow(e as u64),
        }
    }

    /// Parses `num/den` with both sides in the polynomial grammar; a bare
    /// polynomial has denominator 1. Either side may be parenthesized.
    pub fn parse(s: &str, field: PrimeField) -> Result<Self> {
        fn side(s: &str, field: PrimeField) -> Result<FpPoly> {
            let s = s.trim();
            let s = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
            FpPoly::parse(s, field)
        }
        match s.split_once('/') {
            None => Ok(Self::from_poly(side(s, field)?)),
            Some((n, d)) => {
                let den = side(d, field)?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Self::new(side(n, field)?, den)
            }
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |g: &FpPoly| {
            if g.coeffs().iter().filter(|&&c| c != 0).count() > 1 {
                format!("({g})")
            } else {
                g.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[F_{}]({self})", self.field().p())
    }
}

/// The field K = F_p(t) as a coefficient context for polynomials in x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalFunctionField {
    pub field: PrimeField,
}

impl Field for RationalFunctionField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero(self.field)
    }
    fn one(&self) -> RatFunc {
        RatFunc::one(self.field)
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b)
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn inv(&self, a: &RatFunc) -> Result<RatFunc> {
        a.inv()
    }
    fn embed_int(&self, n: u64) -> RatFunc {
        RatFunc::constant(self.field, self.field.reduce(n))
    }
}
