//! Map generators, verification campaigns and report emission.

mod cache;
mod campaign;
mod generate;
mod report;

pub use cache::{OrbitCache, OrbitSummary};
pub use campaign::{
    bound_thresholds, places_up_to, run_bound_campaign, run_property_campaign, CampaignConfig, CampaignReport, Checker,
    GenerationFailure, MapBatch, OrbitRow, Tally, Violation,
};
pub use generate::{gen_map, gen_maps, map_rng, random_poly, MapFamily, MapGenSpec};
pub use report::{emit_report, write_report, ReportFormat};
