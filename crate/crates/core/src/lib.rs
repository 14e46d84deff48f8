//! Arithmetic dynamics of rational maps on the projective line over the
//! rational function field F_p(t).
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: F_p, F_p[t], factorization, residue fields k(π).
//! * [`funcfield`]: K = F_p(t), places, valuations, S-integers and S-units.
//! * [`geometry`]: points of P¹(K), reduction modulo places, the π-adic
//!   logarithmic distance.
//! * [`dynamics`]: endomorphisms of P¹ as pairs of binary forms, resultants,
//!   good reduction, reduced maps, multipliers and PGL₂ conjugation.
//! * [`orbits`]: orbit iteration, residue functional graphs and executable
//!   checkers for the distance and period results.
//! * [`harness`]: map generators, verification campaigns and reports.

pub mod algebra;
pub mod dynamics;
mod error;
pub mod funcfield;
pub mod geometry;
pub mod harness;
pub mod orbits;

pub use error::{Error, Result};
