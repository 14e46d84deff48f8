use std::fmt;

use num_bigint::BigUint;

use crate::algebra::is_prime;
use crate::error::{Error, Result};

/// Value of the uniform orbit-length bound η(p, D, |S|).
#[derive(Debug, Clone, PartialEq)]
pub enum EtaValue {
    /// Positive characteristic: an exact integer.
    Exact(BigUint),
    /// Characteristic zero: the real value, natural logarithms.
    Approx(f64),
}

impl EtaValue {
    pub fn as_u64(&self) -> Option<u64> {
        match self {
            EtaValue::Exact(n) => n.try_into().ok(),
            EtaValue::Approx(_) => None,
        }
    }
}

impl fmt::Display for EtaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaValue::Exact(n) => write!(f, "{n}"),
            EtaValue::Approx(x) => write!(f, "{x}"),
        }
    }
}

/// η(p, D, s) for a global field of characteristic `p` (0 allowed), degree
/// `d` over its base field, and |S| = `s`.
///
/// For p > 0: `(p s)^(4D) * max((p s)^(2D), p^(4s - 2))`.
/// For p = 0: `max((2^(16s-8) + 3) (12 s ln(5s))^D, (12 (s+2) ln(5s+5))^(4D))`.
pub fn eta_bound(p: u64, d: u32, s: u32) -> Result<EtaValue> {
    if d == 0 {
        return Err(Error::InvalidArgument("D must be at least 1".into()));
    }
    if s == 0 {
        return Err(Error::InvalidArgument("|S| must be at least 1".into()));
    }
    if p == 0 {
        let s = s as f64;
        let d = d as f64;
        let first = (2f64.powf(16.0 * s - 8.0) + 3.0) * (12.0 * s * (5.0 * s).ln()).powf(d);
        let second = (12.0 * (s + 2.0) * (5.0 * s + 5.0).ln()).powf(4.0 * d);
        return Ok(EtaValue::Approx(first.max(second)));
    }
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let ps = BigUint::from(p) * BigUint::from(s);
    let lead = ps.pow(4 * d);
    let a = ps.pow(2 * d);
    let b = BigUint::from(p).pow(4 * s - 2);
    Ok(EtaValue::Exact(lead * a.max(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_characteristic_values() {
        assert_eq!(eta_bound(2, 1, 1).unwrap().as_u64(), Some(64));
        assert_eq!(eta_bound(3, 1, 1).unwrap().as_u64(), Some(729));
        // (10)^4 * max(10^2, 5^6) = 10^4 * 15625
        assert_eq!(eta_bound(5, 1, 2).unwrap().as_u64(), Some(156_250_000));
    }

    #[test]
    fn characteristic_zero_value() {
        let expected = (259.0 * 12.0 * 5f64.ln()).max((36.0 * 10f64.ln()).powi(4));
        match eta_bound(0, 1, 1).unwrap() {
            EtaValue::Approx(x) => assert!((x - expected).abs() <= 1e-9 * expected),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_arguments() {
        assert_eq!(eta_bound(4, 1, 1), Err(Error::InvalidPrime(4)));
        assert!(eta_bound(2, 0, 1).is_err());
        assert!(eta_bound(2, 1, 0).is_err());
    }
}
