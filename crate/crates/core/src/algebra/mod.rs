//! Exact arithmetic in F_p, F_p[t] and residue fields F_p[t]/(π).

mod factor;
mod parse;
mod poly;
mod prime_field;
mod residue;
pub mod univariate;

pub use factor::{enumerate_monic_irreducibles, factor, irreducible_support, is_irreducible, Factorization};
pub use parse::parse_poly;
pub use poly::FpPoly;
pub use prime_field::{is_prime, prime_divisors, PrimeField, MAX_PRIME};
pub use residue::{ResidueElem, ResidueField};
pub use univariate::Field;
