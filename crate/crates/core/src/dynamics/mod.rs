//! Endomorphisms of P¹ over F_p(t): normalized models, evaluation,
//! resultants, good and bad reduction, reduced maps, multipliers and
//! conjugation by PGL₂(F_p[t]).

pub mod forms;
mod map;
mod mobius;
mod multiplier;
mod parse;
mod reduce;

pub use map::HomogMap;
pub use mobius::Mobius;
pub use parse::{parse_affine_fraction, parse_map, MapJson};
pub use reduce::ResidueMap;
