use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::PrimeField;
use crate::error::{Error, Result};

/// Dense polynomial over F_p, coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl FpPoly {
    /// Builds a polynomial from arbitrary integer coefficients, reducing them mod p.
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.p();
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        Self::from_reduced(field, coeffs)
    }

    pub(crate) fn from_reduced(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        FpPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: PrimeField, c: u32, k: usize) -> Self {
        let c = c % field.p();
        if c == 0 {
            return Self::zero(field);
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        FpPoly { field, coeffs }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0; the height convention.
    #[inline]
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// True for nonzero constants, the units of F_p[t].
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Leading coefficient, 0 for the zero polynomial.
    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field, other.field, "polynomials over different prime fields");
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        let c = c % f.p();
        if c == 0 {
            return Self::zero(f);
        }
        FpPoly {
            field: f,
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        FpPoly {
            field: self.field,
            coeffs,
        }
    }

    /// Splits off the leading coefficient: returns `(lc, self / lc)`.
    /// The zero polynomial yields `(0, 0)`.
    pub fn monic_parts(&self) -> (u32, Self) {
        let lc = self.leading();
        if lc == 0 {
            return (0, self.clone());
        }
        let inv = self.field.inv(lc).expect("nonzero leading coefficient");
        (lc, self.scale(inv))
    }

    pub fn monic(&self) -> Self {
        self.monic_parts().1
    }

    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        self.check_field(b);
        let f = self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(f), Self::zero(f)));
        };
        if da < db {
            return Ok((Self::zero(f), self.clone()));
        }
        let inv_lc = f.inv(b.leading())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![0u32; da - db + 1];
        for i in (0..=da - db).rev() {
            let c = f.mul(r[i + db], inv_lc);
            q[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                r[i + j] = f.sub(r[i + j], f.mul(c, bj));
            }
        }
        r.truncate(db);
        Ok((Self::from_reduced(f, q), Self::from_reduced(f, r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.divrem(b)?.1)
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, b: &Self) -> Result<Self> {
        let (q, r) = self.divrem(b)?;
        debug_assert!(r.is_zero(), "inexact division {self} / {b}");
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, u)` with `s*self + u*other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        self.check_field(other);
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut u0, mut u1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("r1 nonzero");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let u = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, u);
        }
        let lc = r0.leading();
        if lc == 0 {
            return (r0, s0, u0);
        }
        let inv = f.inv(lc).expect("nonzero");
        (r0.scale(inv), s0.scale(inv), u0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.reduce(i as u64), c))
            .collect();
        Self::from_reduced(f, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one(self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Multiplicity of `pi` in `self` by repeated exact division.
    /// `self` must be nonzero and `pi` nonconstant.
    pub fn multiplicity(&self, pi: &Self) -> u32 {
        debug_assert!(!self.is_zero() && pi.degree().unwrap_or(0) >= 1);
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(pi).expect("pi nonzero");
            if !r.is_zero() {
                return k;
            }
            k += 1;
            cur = q;
        }
    }

    /// Base-p digits of the coefficients, read as an integer. Injective on
    /// polynomials of bounded degree; used to index residue-field elements.
    pub fn to_index(&self) -> u64 {
        let p = self.p() as u64;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c as u64)
    }

    pub fn from_index(field: PrimeField, mut index: u64) -> Self {
        let p = field.p() as u64;
        let mut coeffs = Vec::new();
        while index > 0 {
            coeffs.push((index % p) as u32);
            index /= p;
        }
        Self::from_reduced(field, coeffs)
    }
}

impl Ord for FpPoly {
    /// Degree first, then coefficients from the top down; the zero polynomial is smallest.
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: &FpPoly) -> FpPoly {
        self.check_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        FpPoly::from_reduced(f, coeffs)
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: &FpPoly) -> FpPoly {
        self.check_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        FpPoly::from_reduced(f, coeffs)
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let f = self.field;
        FpPoly {
            field: f,
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        self.check_field(rhs);
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(f);
        }
        let p = f.p() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] += (a * b) as u64;
            }
        }
        FpPoly::from_reduced(f, acc.into_iter().map(|c| (c % p) as u32).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FpPoly {
            type Output = FpPoly;
            fn $m(self, rhs: FpPoly) -> FpPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FpPoly> for FpPoly {
            type Output = FpPoly;
            fn $m(self, rhs: &FpPoly) -> FpPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        -&self
    }
}

impl fmt::Display for FpPoly {
    /// Writes the polynomial in the `c*t^k + ...` grammar, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[F_{}]({self})", self.p())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[u32]) -> FpPoly {
        FpPoly::new(PrimeField::new(p).unwrap(), c.to_vec())
    }

    #[test]
    fn gcd_extracts_common_factor() {
        // gcd(t^2 + t, t) = t over F_2
        assert_eq!(poly(2, &[0, 1, 1]).gcd(&poly(2, &[0, 1])), poly(2, &[0, 1]));
    }

    #[test]
    fn divrem_square_in_char_two() {
        let (q, r) = poly(2, &[1, 0, 1]).divrem(&poly(2, &[1, 1])).unwrap();
        assert_eq!(q, poly(2, &[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn derivative_drops_multiples_of_p() {
        // d/dt (t^3 + t) = 3t^2 + 1 = 1 over F_3
        assert_eq!(poly(3, &[0, 1, 0, 1]).derivative(), poly(3, &[1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(poly(5, &[1, 2]).divrem(&poly(5, &[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = poly(7, &[3, 0, 1, 5]);
        let b = poly(7, &[1, 1, 2]);
        let (g, s, u) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn display_uses_grammar() {
        assert_eq!(poly(3, &[1, 2, 1]).to_string(), "t^2+2*t+1");
        assert_eq!(poly(3, &[]).to_string(), "0");
        assert_eq!(poly(5, &[0, 1, 0, 4]).to_string(), "4*t^3+t");
    }

    #[test]
    fn index_round_trip() {
        let f = PrimeField::new(3).unwrap();
        for i in 0..81 {
            assert_eq!(FpPoly::from_index(f, i).to_index(), i);
        }
    }

    #[test]
    fn ordering_is_degree_then_top_coefficients() {
        let mut v = vec![poly(2, &[1, 1]), poly(2, &[0, 1]), poly(2, &[1]), poly(2, &[])];
        v.sort();
        assert_eq!(v, vec![poly(2, &[]), poly(2, &[1]), poly(2, &[0, 1]), poly(2, &[1, 1])]);
    }
}
