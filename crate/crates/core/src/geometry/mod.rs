//! Points of P¹(F_p(t)), their reductions, and the π-adic logarithmic distance.

mod distance;
mod point;
mod residue_point;

pub use distance::{cross_product, log_distance, log_distance_coords};
pub use point::{enumerate_points, normalize, Height, ProjPoint};
pub use residue_point::{reduce_point, reduce_point_at, ResiduePoint};
