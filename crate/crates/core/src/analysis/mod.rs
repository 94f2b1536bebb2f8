//! Verification built on the metric and solver layers: Euclidean and metric
//! ball inclusions, uniformity diagnostics, near-limit ratios and the named
//! inequality suites behind `hypmetrics verify`.

mod balls;
mod mobius;
pub mod sampling;
mod sharpness;
mod suites;
mod uniformity;

use serde::Serialize;

use crate::geom::Point;

pub use balls::{
    check_ball_inclusion, check_chain_inclusion, check_fixed_factor_inclusion, fixed_factor_ball_radii,
    ray_crossing, trace_metric_ball, zeta_ball_radii, zeta_m_ball_chain_radii, BallInclusionReport,
    BallViolation, FixedFactorRelation,
};
pub use mobius::random_mobius_map;
pub use sharpness::{sharpness_limit_suite, SharpnessCheck};
pub use suites::{
    ball_check_centers, find_suite, run_suites, suites, test_domains, Suite, SuiteReport, VerifyConfig,
    BALL_RADII, BALL_UNIFORMITY_BOUND, CHAIN_RADII, SOLVER_TOL,
};
pub use uniformity::{
    nonuniform_zeta_k_check, slit_straddle_pair, slit_straddle_ratios, uniformity_ratio,
    uniformity_ratio_on_pairs, StraddleRatio, UniformityEstimate, ZetaKReport, PAIR_CLEARANCE,
};

/// A pair at which `lhs ≤ rhs` failed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairViolation {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

impl PairViolation {
    pub fn new(x: &Point, y: &Point, lhs: f64, rhs: f64) -> Self {
        Self {
            x: x.coords().to_vec(),
            y: y.coords().to_vec(),
            lhs,
            rhs,
        }
    }
}
