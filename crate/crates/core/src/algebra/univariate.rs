//! Dense univariate polynomials over an abstract field context.
//!
//! Used for polynomials in the dynamical variable x, with coefficients
//! either in a residue field k(π) or in K = F_p(t). Coefficient vectors are
//! lowest degree first and kept trimmed.

use super::{FpPoly, ResidueField};
use crate::error::{Error, Result};

pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// Image of the integer `n` under Z -> field.
    fn embed_int(&self, n: u64) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

impl Field for ResidueField {
    type Elem = FpPoly;

    fn zero(&self) -> FpPoly {
        ResidueField::zero(self)
    }
    fn one(&self) -> FpPoly {
        ResidueField::one(self)
    }
    fn is_zero(&self, a: &FpPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        ResidueField::add(self, a, b)
    }
    fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        ResidueField::sub(self, a, b)
    }
    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        ResidueField::mul(self, a, b)
    }
    fn inv(&self, a: &FpPoly) -> Result<FpPoly> {
        ResidueField::inv(self, a)
    }
    fn embed_int(&self, n: u64) -> FpPoly {
        let f = self.modulus().field();
        FpPoly::constant(f, f.reduce(n))
    }
}

pub fn trim<F: Field>(k: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
    while a.last().is_some_and(|c| k.is_zero(c)) {
        a.pop();
    }
    a
}

pub fn degree<F: Field>(a: &[F::Elem]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n)
        .map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(k, out)
}

pub fn sub<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n)
        .map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(k, out)
}

pub fn mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    trim(k, out)
}

/// Coefficient vector over `F`, lowest degree first.
pub type Poly<F> = Vec<<F as Field>::Elem>;

pub fn scale<F: Field>(k: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    trim(k, a.iter().map(|x| k.mul(x, c)).collect())
}

pub fn divrem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<(Poly<F>, Poly<F>)> {
    let db = degree::<F>(b).ok_or(Error::DivisionByZero)?;
    let Some(da) = degree::<F>(a) else {
        return Ok((Vec::new(), Vec::new()));
    };
    if da < db {
        return Ok((Vec::new(), a.to_vec()));
    }
    let inv_lc = k.inv(&b[db])?;
    let mut r = a.to_vec();
    let mut q = vec![k.zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = k.mul(&r[i + db], &inv_lc);
        if k.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = k.sub(&r[i + j], &k.mul(&c, bj));
        }
        q[i] = c;
    }
    r.truncate(db);
    Ok((trim(k, q), trim(k, r)))
}

pub fn monic<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lc) => scale(k, a, &k.inv(lc).expect("trimmed leading coefficient")),
    }
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub fn gcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = divrem(k, &x, &y).expect("y nonzero").1;
        x = y;
        y = r;
    }
    monic(k, &x)
}

pub fn derivative<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(&k.embed_int(i as u64), c))
        .collect();
    trim(k, out)
}

pub fn eval<F: Field>(k: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn gcd_over_f4() {
        let f = PrimeField::new(2).unwrap();
        let k = ResidueField::new(FpPoly::new(f, vec![1, 1, 1])).unwrap();
        let w = FpPoly::t(f);
        let one = FpPoly::one(f);
        // (x + w)(x + 1) and (x + w) x share x + w
        let a = mul(&k, &[w.clone(), one.clone()], &[one.clone(), one.clone()]);
        let b = mul(&k, &[w.clone(), one.clone()], &[k.zero(), one.clone()]);
        assert_eq!(gcd(&k, &a, &b), vec![w, one]);
    }

    #[test]
    fn divrem_reconstructs() {
        let f = PrimeField::new(3).unwrap();
        let k = ResidueField::new(FpPoly::new(f, vec![1, 0, 1])).unwrap();
        let a: Vec<FpPoly> = [5u64, 7, 1, 8].iter().map(|&i| FpPoly::from_index(f, i)).collect();
        let b: Vec<FpPoly> = [2u64, 4].iter().map(|&i| FpPoly::from_index(f, i)).collect();
        let (q, r) = divrem(&k, &a, &b).unwrap();
        assert_eq!(add(&k, &mul(&k, &q, &b), &r), trim(&k, a));
        assert!(r.len() < b.len());
    }
}
