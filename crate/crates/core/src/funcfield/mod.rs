//! The global field K = F_p(t): rational functions, places, valuations,
//! S-integers and S-units, and the uniform bound η.

mod eta;
mod place;
mod ratfunc;

pub use eta::{eta_bound, EtaValue};
pub use place::{
    finite_support, is_s_integer, is_s_unit, poly_valuation, product_formula_check, valuation, Place, PlaceSet,
    Valuation,
};
pub use ratfunc::{RatFunc, RationalFunctionField};
