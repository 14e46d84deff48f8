//! Irreducibility testing and factorization in F_p[t].
//!
//! Factorization runs the classical pipeline: squarefree decomposition,
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree splitting.
//! The random splitting elements come from a fixed-seed generator so that
//! every call is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::prime_field::prime_divisors;
use super::{FpPoly, PrimeField};
use crate::error::{Error, Result};

const SPLIT_SEED: u64 = 0x5eed_f00d;

/// A factorization `unit * prod(factor^mult)` with monic irreducible factors
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(FpPoly, u32)>,
}

impl Factorization {
    pub fn recompose(&self, field: PrimeField) -> FpPoly {
        self.factors
            .iter()
            .fold(FpPoly::constant(field, self.unit), |acc, (g, m)| {
                &acc * &g.pow(*m as u64)
            })
    }
}

/// `t^(p^k) mod f` for k = 0, 1, ..., computed by repeated p-th powering.
fn frobenius_power(x: &FpPoly, k: usize, f: &FpPoly) -> FpPoly {
    let p = f.p() as u128;
    let mut cur = x.rem(f).expect("f nonzero");
    for _ in 0..k {
        cur = cur.pow_mod(p, f).expect("f nonzero");
    }
    cur
}

/// Rabin's test: `f` of degree n is irreducible iff `t^(p^n) = t mod f` and
/// `gcd(t^(p^(n/l)) - t, f) = 1` for every prime l dividing n.
pub fn is_irreducible(f: &FpPoly) -> Result<bool> {
    let n = match f.degree() {
        None => return Err(Error::ZeroInput),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    let f = f.monic();
    let t = FpPoly::t(f.field());
    if frobenius_power(&t, n, &f) != t {
        return Ok(false);
    }
    for l in prime_divisors(n as u64) {
        let h = &frobenius_power(&t, n / l as usize, &f) - &t;
        if !h.gcd(&f).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial whose coefficients are those of `f` at indices divisible by p;
/// the p-th root of `f` when `f' = 0` (Frobenius is the identity on F_p).
fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.p() as usize;
    let coeffs = f.coeffs().iter().step_by(p).copied().collect();
    FpPoly::new(f.field(), coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with `g`
/// squarefree and `f = prod g^i`.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = f.p();
    let c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("c divides f");
    let mut c = c;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).expect("y divides w");
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = c.div_exact(&y).expect("y divides c");
        w = y;
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic squarefree `f` into pairs `(g, d)` where `g` is the product
/// of all irreducible factors of degree d.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let t = FpPoly::t(f.field());
    let p = f.p() as u128;
    let mut rest = f.clone();
    let mut h = t.rem(&rest).expect("nonzero");
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(p, &rest).expect("nonzero");
        let g = (&h - &t).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("g divides rest");
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng, field: PrimeField, below_degree: usize) -> FpPoly {
    let coeffs = (0..below_degree).map(|_| rng.gen_range(0..field.p())).collect();
    FpPoly::new(field, coeffs)
}

/// Cantor–Zassenhaus splitting of a monic product of distinct irreducibles
/// all of degree `d`.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let p = field.p() as u128;
    loop {
        let a = random_poly(rng, field, n);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let candidate = if !g.is_one() {
            g
        } else if field.p() == 2 {
            // Absolute trace a + a^2 + ... + a^(2^(d-1)) lands in F_2 on each factor.
            let mut term = a.rem(f).expect("nonzero");
            let mut trace = term.clone();
            for _ in 1..d {
                term = term.pow_mod(2, f).expect("nonzero");
                trace = &trace + &term;
            }
            trace.gcd(f)
        } else {
            // a^((p^d - 1)/2) = N(a)^((p-1)/2) with N(a) = a^(1 + p + ... + p^(d-1)).
            let mut term = a.rem(f).expect("nonzero");
            let mut norm = term.clone();
            for _ in 1..d {
                term = term.pow_mod(p, f).expect("nonzero");
                norm = (&norm * &term).rem(f).expect("nonzero");
            }
            let b = norm.pow_mod((p - 1) / 2, f).expect("nonzero");
            (&b - &FpPoly::one(field)).gcd(f)
        };
        let deg = candidate.degree().unwrap_or(0);
        if deg > 0 && deg < n {
            let other = f.div_exact(&candidate).expect("factor divides f");
            let mut out = equal_degree(&candidate, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Complete factorization into a unit times monic irreducible powers.
pub fn factor(f: &FpPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (unit, monic) = f.monic_parts();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&sqf) {
            for g in equal_degree(&block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort();
    let mut merged: Vec<(FpPoly, u32)> = Vec::with_capacity(factors.len());
    for (g, m) in factors {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += m,
            _ => merged.push((g, m)),
        }
    }
    Ok(Factorization { unit, factors: merged })
}

/// Distinct monic irreducible factors, ascending.
pub fn irreducible_support(f: &FpPoly) -> Result<Vec<FpPoly>> {
    Ok(factor(f)?.factors.into_iter().map(|(g, _)| g).collect())
}

/// All monic irreducibles of degree exactly `d`, in ascending order.
pub fn enumerate_monic_irreducibles(field: PrimeField, d: usize) -> Vec<FpPoly> {
    if d == 0 {
        return Vec::new();
    }
    let q = (field.p() as u64).pow(d as u32);
    // Index order of the low coefficients coincides with the polynomial order
    // for a fixed monic leading term.
    (0..q)
        .map(|i| {
            let low = FpPoly::from_index(field, i);
            &low + &FpPoly::monomial(field, 1, d)
        })
        .filter(|g| is_irreducible(g).expect("degree >= 1"))
        .collect()
}
