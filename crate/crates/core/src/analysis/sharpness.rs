//! Near-limit ratios in the unit disk that show the comparison constants
//! cannot be improved.
//!
//! Limits as `t → 1` converge like `1/log(1/(1 − t))`, far too slowly for
//! representable points. Those ratios are evaluated on a radial pair given by
//! its boundary distances: the origin (`δ = 1`) and a point at distance
//! `t = 1 − s` from it (`δ = s`), fed through the generic Lipschitz-log
//! metrics. That keeps `s` as small as `1e-300`.

use serde::Serialize;

use crate::error::Result;
use crate::geom::{Domain, Point};
use crate::metrics::{self, lipschitz_log_metric, lipschitz_log_metric_sym};
use crate::path::{shortest_path_estimate, DensityField, DensityKind, SolverConfig};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SharpnessCheck {
    pub name: &'static str,
    /// Human-readable form of the ratio and its limit.
    pub ratio: &'static str,
    /// Near-limit parameter: `t`, or `1 − t` for limits at `t → 1`.
    pub parameter: f64,
    pub value: f64,
    pub limit: f64,
    pub tolerance: f64,
}

impl SharpnessCheck {
    pub fn deviation(&self) -> f64 {
        (self.value - self.limit).abs()
    }

    pub fn passed(&self) -> bool {
        self.deviation() <= self.tolerance
    }
}

/// Radial pair `(0, 1 − s)` in the unit disk described by boundary distances.
struct RadialPair {
    x: Point,
    y: Point,
    delta_y: f64,
}

impl RadialPair {
    fn new(s: f64) -> Self {
        Self {
            x: Point::xy(0.0, 0.0),
            y: Point::xy(1.0 - s, 0.0),
            delta_y: s,
        }
    }

    fn delta(&self, p: &Point) -> f64 {
        if *p == self.x {
            1.0
        } else {
            self.delta_y
        }
    }

    fn eta(&self, p: &Point) -> f64 {
        let d = self.delta(p);
        d * (2.0 - d)
    }

    fn j(&self) -> Result<f64> {
        lipschitz_log_metric(|p| self.delta(p), 1.0, &self.x, &self.y)
    }

    fn zeta(&self) -> Result<f64> {
        lipschitz_log_metric(|p| self.eta(p), 2.0, &self.x, &self.y)
    }

    fn zeta_prime(&self) -> Result<f64> {
        lipschitz_log_metric_sym(|p| self.eta(p), 2.0, &self.x, &self.y)
    }
}

pub const SMALL_T: f64 = 1e-4;
pub const GAP_NEAR_ONE: f64 = 1e-300;
pub const SYMMETRIC_GAP_NEAR_ONE: f64 = 1e-6;

/// Evaluates the six limit ratios. `cfg` drives the `k` estimate.
pub fn sharpness_limit_suite(cfg: &SolverConfig) -> Result<Vec<SharpnessCheck>> {
    let disk = Domain::unit_disk();
    let origin = Point::xy(0.0, 0.0);
    let t = SMALL_T;
    let radial = Point::xy(t, 0.0);
    let (minus, plus) = (Point::xy(-t, 0.0), Point::xy(t, 0.0));
    let far = RadialPair::new(GAP_NEAR_ONE);
    let u = 1.0 - SYMMETRIC_GAP_NEAR_ONE;
    let (far_minus, far_plus) = (Point::xy(-u, 0.0), Point::xy(u, 0.0));

    let k_field = DensityField::new(DensityKind::K, &disk)?;
    let k_est = shortest_path_estimate(&k_field, &origin, &radial, cfg)?.value;

    let check = |name, ratio, parameter, value, limit, tolerance| SharpnessCheck {
        name,
        ratio,
        parameter,
        value,
        limit,
        tolerance,
    };
    Ok(vec![
        check(
            "j-over-zeta-near-center",
            "j(0,t)/zeta(0,t) -> 1/2 as t -> 0",
            t,
            metrics::j_metric(&disk, &origin, &radial)? / metrics::zeta(&disk, &origin, &radial)?,
            0.5,
            1e-3,
        ),
        check(
            "zeta-prime-over-zeta-near-boundary",
            "zeta'(0,t)/zeta(0,t) -> 1/2 as t -> 1",
            GAP_NEAR_ONE,
            far.zeta_prime()? / far.zeta()?,
            0.5,
            1e-3,
        ),
        check(
            "zeta-prime-over-j-symmetric-near-center",
            "zeta'(-t,t)/j'(-t,t) = zeta'(-t,t)/j(-t,t) -> 2 as t -> 0",
            t,
            metrics::zeta_prime(&disk, &minus, &plus)? / metrics::j_prime_metric(&disk, &minus, &plus)?,
            2.0,
            1e-3,
        ),
        check(
            "zeta-over-j-prime-symmetric-near-boundary",
            "zeta(-t,t)/j'(-t,t) -> 1 as t -> 1",
            SYMMETRIC_GAP_NEAR_ONE,
            metrics::zeta(&disk, &far_minus, &far_plus)?
                / metrics::j_prime_metric(&disk, &far_minus, &far_plus)?,
            1.0,
            1e-3,
        ),
        check(
            "zeta-over-k-near-center",
            "zeta(0,t)/k(0,t) -> 2 as t -> 0",
            t,
            metrics::zeta(&disk, &origin, &radial)? / k_est,
            2.0,
            1e-3,
        ),
        check(
            "zeta-prime-over-j-near-boundary",
            "zeta'(0,t)/j(0,t) -> 1/2 as t -> 1",
            GAP_NEAR_ONE,
            far.zeta_prime()? / far.j()?,
            0.5,
            1e-2,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radial_pair_matches_closed_forms_where_representable() {
        let disk = Domain::unit_disk();
        let s = 0.25;
        let pair = RadialPair::new(s);
        let (x, y) = (Point::xy(0.0, 0.0), Point::xy(1.0 - s, 0.0));
        assert!((pair.j().unwrap() - metrics::j_metric(&disk, &x, &y).unwrap()).abs() < 1e-15);
        assert!((pair.zeta().unwrap() - metrics::zeta(&disk, &x, &y).unwrap()).abs() < 1e-15);
        assert!((pair.zeta_prime().unwrap() - metrics::zeta_prime(&disk, &x, &y).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn all_limits_within_tolerance() {
        for c in sharpness_limit_suite(&SolverConfig::default()).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn zeta_over_j_prime_from_the_center_tends_to_two() {
        // Both ζ(0,t) and 2j'(0,t) grow like log(1/(1 − t)).
        let pair = RadialPair::new(1e-300);
        let jp = lipschitz_log_metric_sym(|p| pair.delta(p), 1.0, &pair.x, &pair.y).unwrap();
        assert!((pair.zeta().unwrap() / jp - 2.0).abs() < 1e-2);
    }
}
