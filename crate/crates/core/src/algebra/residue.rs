use std::fmt;

use super::factor::is_irreducible;
use super::prime_field::prime_divisors;
use super::FpPoly;
use crate::error::{Error, Result};

/// The residue field k(π) = F_p[t]/(π) of a monic irreducible π.
///
/// Elements are represented by their reduced remainders; the methods here
/// take and return such remainders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueField {
    modulus: FpPoly,
}

impl ResidueField {
    pub fn new(modulus: FpPoly) -> Result<Self> {
        if !modulus.is_monic() || !is_irreducible(&modulus)? {
            return Err(Error::NotIrreducible(modulus.to_string()));
        }
        Ok(ResidueField { modulus })
    }

    /// Skips the irreducibility check; for moduli already validated elsewhere.
    pub(crate) fn new_unchecked(modulus: FpPoly) -> Self {
        ResidueField { modulus }
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("modulus nonconstant")
    }

    /// Number of elements p^deg(π).
    pub fn order(&self) -> u64 {
        (self.modulus.p() as u64).pow(self.degree() as u32)
    }

    pub fn reduce(&self, a: &FpPoly) -> FpPoly {
        a.rem(&self.modulus).expect("modulus nonzero")
    }

    pub fn zero(&self) -> FpPoly {
        FpPoly::zero(self.modulus.field())
    }

    pub fn one(&self) -> FpPoly {
        FpPoly::one(self.modulus.field())
    }

    pub fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a + b
    }

    pub fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a - b
    }

    pub fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.reduce(&(a * b))
    }

    pub fn inv(&self, a: &FpPoly) -> Result<FpPoly> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, s, _) = a.ext_gcd(&self.modulus);
        debug_assert!(g.is_one());
        Ok(self.reduce(&s))
    }

    pub fn pow(&self, a: &FpPoly, e: u128) -> FpPoly {
        a.pow_mod(e, &self.modulus).expect("modulus nonzero")
    }

    /// Least r >= 1 with a^r = 1, found by stripping prime factors off p^deg - 1.
    pub fn mult_order(&self, a: &FpPoly) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let group = self.order() - 1;
        let mut order = group;
        for l in prime_divisors(group) {
            while order.is_multiple_of(l) && self.pow(a, (order / l) as u128).is_one() {
                order /= l;
            }
        }
        Ok(order)
    }

    pub fn elem(&self, rep: &FpPoly) -> ResidueElem {
        ResidueElem {
            field: self.clone(),
            rep: self.reduce(rep),
        }
    }

    /// Element with index `i` in `0..order()`, digits of `i` in base p.
    pub fn element_at(&self, i: u64) -> FpPoly {
        FpPoly::from_index(self.modulus.field(), i)
    }
}

/// An element of k(π) together with its field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueElem {
    field: ResidueField,
    rep: FpPoly,
}

impl ResidueElem {
    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn rep(&self) -> &FpPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.field, other.field, "residues modulo different places");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        self.with(self.field.add(&self.rep, &other.rep))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        self.with(self.field.sub(&self.rep, &other.rep))
    }

    pub fn neg(&self) -> Self {
        self.with(-&self.rep)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        self.with(self.field.mul(&self.rep, &other.rep))
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(&self.rep)?))
    }

    pub fn pow(&self, e: u128) -> Self {
        self.with(self.field.pow(&self.rep, e))
    }

    pub fn mult_order(&self) -> Result<u64> {
        self.field.mult_order(&self.rep)
    }

    fn with(&self, rep: FpPoly) -> Self {
        ResidueElem {
            field: self.field.clone(),
            rep,
        }
    }
}

impl fmt::Debug for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})", self.rep, self.field.modulus)
    }
}

impl fmt::Display for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}
