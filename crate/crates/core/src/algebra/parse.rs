use super::{FpPoly, PrimeField};
use crate::error::{Error, Result};

fn parse_uint(s: &str, what: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected {what}, found {s:?}")));
    }
    s.parse().map_err(|_| Error::Parse(format!("{what} out of range: {s}")))
}

fn parse_coeff(s: &str, field: PrimeField) -> Result<u32> {
    let c = parse_uint(s, "a coefficient")?;
    if c >= field.p() as u64 {
        return Err(Error::Parse(format!("coefficient {c} not in [0, {})", field.p())));
    }
    Ok(c as u32)
}

/// `t`, `t^k`; returns the exponent.
fn parse_power(s: &str) -> Result<usize> {
    match s.strip_prefix('t') {
        Some("") => Ok(1),
        Some(rest) => {
            let k = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::Parse(format!("malformed power {s:?}")))?;
            Ok(parse_uint(k, "an exponent")? as usize)
        }
        None => Err(Error::Parse(format!("expected t, found {s:?}"))),
    }
}

/// Parses the term grammar `c`, `t`, `t^k`, `c*t^k` joined by `+`,
/// ignoring whitespace. Coefficients must lie in `[0, p)`.
pub fn parse_poly(s: &str, field: PrimeField) -> Result<FpPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut acc = FpPoly::zero(field);
    for term in compact.split('+') {
        let (c, k) = match term.split_once('*') {
            Some((c, power)) => (parse_coeff(c, field)?, parse_power(power)?),
            None if term.starts_with('t') => (1, parse_power(term)?),
            None => (parse_coeff(term, field)?, 0),
        };
        acc = &acc + &FpPoly::monomial(field, c, k);
    }
    Ok(acc)
}

impl FpPoly {
    pub fn parse(s: &str, field: PrimeField) -> Result<Self> {
        parse_poly(s, field)
    }
}
