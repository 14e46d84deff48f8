//! Orbits over F_p(t) and over residue fields, and checkers for the
//! distance and period relations along them.

mod checks;
mod graph;
mod mst;
mod orbit;
mod periodic;

pub use checks::{
    check_lemma_equal_distances, check_lemma_pab, check_lemma_pab_normalized, check_lemma_pab_power, check_prop_51,
    check_prop_52, check_prop_61, joint_support, periodic_cycle, prop_52_distances, CheckRecord, EqualDistances,
    Verdict, Witness,
};
pub use graph::{residue_dynamics, residue_dynamics_with_cap, FunctionalGraph, DEFAULT_GRAPH_CAP};
pub use mst::{classify, verify_mst, verify_mst_with, MstCase, MstDecomposition};
pub use orbit::{default_max_height, default_max_steps, iterate_orbit, minimal_period, OrbitReport, OrbitStatus};
pub use periodic::{find_periodic_points, find_periodic_points_capped};
