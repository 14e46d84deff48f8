//! Text forms of maps: the JSON schema and the affine shorthand.
//!
//! The shorthand is an arithmetic expression in `x` over F_p(t) built from
//! integers in `[0, p)`, `t`, `x`, parentheses and `+ - * / ^`, for example
//! `x^2+t`, `(x^2+t)/x` or `1/x^2`.

use serde::{Deserialize, Serialize};

use super::HomogMap;
use crate::algebra::univariate as uni;
use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::funcfield::{RatFunc, RationalFunctionField};

/// `{ "p": int, "d": int, "F": [...], "G": [...] }`, coefficients in the
/// rational-function grammar, X-degree descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub p: u64,
    pub d: usize,
    #[serde(rename = "F")]
    pub f: Vec<String>,
    #[serde(rename = "G")]
    pub g: Vec<String>,
}

impl MapJson {
    pub fn from_map(map: &HomogMap) -> Self {
        MapJson {
            p: map.field().p() as u64,
            d: map.degree(),
            f: map.f().iter().map(|c| c.to_string()).collect(),
            g: map.g().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_map(&self) -> Result<HomogMap> {
        let field = PrimeField::new(self.p)?;
        if self.f.len() != self.d + 1 || self.g.len() != self.d + 1 {
            return Err(Error::Parse(format!(
                "degree {} needs {} coefficients per form",
                self.d,
                self.d + 1
            )));
        }
        let parse = |v: &[String]| -> Result<Vec<RatFunc>> { v.iter().map(|s| RatFunc::parse(s, field)).collect() };
        HomogMap::new(field, parse(&self.f)?, parse(&self.g)?)
    }
}

impl HomogMap {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MapJson::from_map(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: MapJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        spec.to_map()
    }

    /// Parses the affine shorthand, e.g. `x^2+t` or `(x^2+2*t)/x`.
    pub fn parse_affine(s: &str, field: PrimeField) -> Result<Self> {
        let (num, den) = parse_affine_fraction(s, field)?;
        HomogMap::from_rational_function(&num, &den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    Num(u64),
    T,
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        chars.next();
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut n = c.to_digit(10).unwrap() as u64;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse("integer too large".into()))?;
                    chars.next();
                }
                Token::Num(n)
            }
            't' => Token::T,
            'x' => Token::X,
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        };
        out.push(tok);
    }
    Ok(out)
}

/// A rational function in x: numerator and denominator ascending in x.
#[derive(Clone)]
struct Frac {
    num: Vec<RatFunc>,
    den: Vec<RatFunc>,
}

struct Parser<'a> {
    k: RationalFunctionField,
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn constant(&self, c: RatFunc) -> Frac {
        Frac {
            num: uni::trim(&self.k, vec![c]),
            den: vec![RatFunc::one(self.k.field)],
        }
    }

    fn add(&self, a: &Frac, b: &Frac, negate: bool) -> Frac {
        let k = &self.k;
        let left = uni::mul(k, &a.num, &b.den);
        let right = uni::mul(k, &b.num, &a.den);
        let num = if negate {
            uni::sub(k, &left, &right)
        } else {
            uni::add(k, &left, &right)
        };
        Frac {
            num,
            den: uni::mul(k, &a.den, &b.den),
        }
    }

    fn mul(&self, a: &Frac, b: &Frac) -> Frac {
        Frac {
            num: uni::mul(&self.k, &a.num, &b.num),
            den: uni::mul(&self.k, &a.den, &b.den),
        }
    }

    fn div(&self, a: &Frac, b: &Frac) -> Result<Frac> {
        if b.num.is_empty() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(Frac {
            num: uni::mul(&self.k, &a.num, &b.den),
            den: uni::mul(&self.k, &a.den, &b.num),
        })
    }

    fn expr(&mut self) -> Result<Frac> {
        let negate_first = if self.peek() == Some(Token::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = self.add(&self.constant(RatFunc::zero(self.k.field)), &acc, true);
        }
        while let Some(op @ (Token::Plus | Token::Minus)) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = self.add(&acc, &rhs, op == Token::Minus);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.factor()?;
        while let Some(op @ (Token::Star | Token::Slash)) = self.peek() {
            self.bump();
            let rhs = self.factor()?;
            acc = if op == Token::Star {
                self.mul(&acc, &rhs)
            } else {
                self.div(&acc, &rhs)?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Frac> {
        let base = self.atom()?;
        if self.peek() != Some(Token::Caret) {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Some(Token::Num(e)) if e <= 64 => {
                let one = self.constant(RatFunc::one(self.k.field));
                Ok((0..e).fold(one, |acc, _| self.mul(&acc, &base)))
            }
            other => Err(Error::Parse(format!("expected a small exponent, found {other:?}"))),
        }
    }

    fn atom(&mut self) -> Result<Frac> {
        let field = self.k.field;
        match self.bump() {
            Some(Token::Num(n)) => {
                if n >= field.p() as u64 {
                    return Err(Error::Parse(format!("coefficient {n} not in [0, {})", field.p())));
                }
                Ok(self.constant(RatFunc::constant(field, n as u32)))
            }
            Some(Token::T) => Ok(self.constant(RatFunc::t(field))),
            Some(Token::X) => Ok(Frac {
                num: vec![RatFunc::zero(field), RatFunc::one(field)],
                den: vec![RatFunc::one(field)],
            }),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses the shorthand into a reduced fraction `num/den` of polynomials in
/// x over F_p(t), ascending coefficients.
pub fn parse_affine_fraction(s: &str, field: PrimeField) -> Result<(Vec<RatFunc>, Vec<RatFunc>)> {
    let tokens = tokenize(s)?;
    let k = RationalFunctionField { field };
    let mut parser = Parser {
        k,
        tokens: &tokens,
        pos: 0,
    };
    let frac = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(Error::Parse(format!("trailing input after token {}", parser.pos)));
    }
    let h = uni::gcd(&k, &frac.num, &frac.den);
    let num = uni::divrem(&k, &frac.num, &h)?.0;
    let den = uni::divrem(&k, &frac.den, &h)?.0;
    // Monic denominator keeps the output canonical.
    let lc = den.last().expect("denominator nonzero").clone();
    let inv = lc.inv()?;
    Ok((uni::scale(&k, &num, &inv), uni::scale(&k, &den, &inv)))
}

/// Accepts either a JSON map document or the affine shorthand. `p` is
/// required for the shorthand; for JSON it must agree with the document.
pub fn parse_map(s: &str, p: Option<u64>) -> Result<HomogMap> {
    let s = s.trim();
    if s.starts_with('{') {
        let map = HomogMap::from_json(s)?;
        if let Some(p) = p {
            if p != map.field().p() as u64 {
                return Err(Error::InvalidArgument(format!(
                    "-p {p} conflicts with the map's characteristic {}",
                    map.field().p()
                )));
            }
        }
        return Ok(map);
    }
    let p = p.ok_or_else(|| Error::InvalidArgument("the affine shorthand needs -p".into()))?;
    HomogMap::parse_affine(s, PrimeField::new(p)?)
}
