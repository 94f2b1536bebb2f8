//! Closed-form point-pair metrics.
//!
//! All four distance-ratio metrics are instances of two generic log-metrics
//! built from a positive `α`-Lipschitz weight `f`:
//!
//! ```text
//! d(x, y)  = log(1 + α|x − y| / min(f(x), f(y)))
//! d'(x, y) = ½ log((1 + α|x − y| / f(x)) (1 + α|x − y| / f(y)))
//! ```
//!
//! `j`/`j'` use `f = δ`, `α = 1`; `ζ`/`ζ'` use `f = η`, `α = d(D)`. On
//! unbounded domains `ζ` and `ζ'` are defined to be `j` and `j'`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{Domain, Point, Shape};

/// Which metric of the family to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MetricKind {
    J,
    JPrime,
    Zeta,
    ZetaPrime,
    /// Quasihyperbolic metric (numerical).
    K,
    /// Infimal length for the density d(D)/η (numerical).
    M,
    /// Hyperbolic metric of a ball or half-space (closed form).
    H,
}

impl MetricKind {
    pub const ALL: [MetricKind; 7] = [
        MetricKind::J,
        MetricKind::JPrime,
        MetricKind::Zeta,
        MetricKind::ZetaPrime,
        MetricKind::K,
        MetricKind::M,
        MetricKind::H,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::J => "j",
            MetricKind::JPrime => "j_prime",
            MetricKind::Zeta => "zeta",
            MetricKind::ZetaPrime => "zeta_prime",
            MetricKind::K => "k",
            MetricKind::M => "m",
            MetricKind::H => "h",
        }
    }

    pub fn is_closed_form(self) -> bool {
        !matches!(self, MetricKind::K | MetricKind::M)
    }

    /// Evaluates a closed-form metric. `K` and `M` need the geodesic solver.
    pub fn closed_form(self, domain: &Domain, x: &Point, y: &Point) -> Result<f64> {
        match self {
            MetricKind::J => j_metric(domain, x, y),
            MetricKind::JPrime => j_prime_metric(domain, x, y),
            MetricKind::Zeta => zeta(domain, x, y),
            MetricKind::ZetaPrime => zeta_prime(domain, x, y),
            MetricKind::H => hyperbolic_closed_form(domain, x, y),
            MetricKind::K | MetricKind::M => Err(Error::InvalidArgument(format!(
                "{} has no closed form; use the geodesic solver",
                self.name()
            ))),
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "j" => MetricKind::J,
            "j'" | "jp" | "j_prime" | "jprime" => MetricKind::JPrime,
            "zeta" | "z" => MetricKind::Zeta,
            "zeta'" | "zp" | "zeta_prime" | "zetaprime" => MetricKind::ZetaPrime,
            "k" => MetricKind::K,
            "m" => MetricKind::M,
            "h" => MetricKind::H,
            other => return Err(Error::InvalidArgument(format!("unknown metric `{other}`"))),
        })
    }
}

fn check_weights(fx: f64, fy: f64) -> Result<()> {
    for v in [fx, fy] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::NonPositiveWeight(v));
        }
    }
    Ok(())
}

/// `log(1 + α|x − y| / min(f(x), f(y)))` for a positive `α`-Lipschitz `f`.
pub fn lipschitz_log_metric<F>(f: F, alpha: f64, x: &Point, y: &Point) -> Result<f64>
where
    F: Fn(&Point) -> f64,
{
    let (fx, fy) = (f(x), f(y));
    check_weights(fx, fy)?;
    Ok(log_ratio(alpha * x.dist(y), fx.min(fy)))
}

/// `½ log((1 + α|x − y|/f(x)) (1 + α|x − y|/f(y)))`.
pub fn lipschitz_log_metric_sym<F>(f: F, alpha: f64, x: &Point, y: &Point) -> Result<f64>
where
    F: Fn(&Point) -> f64,
{
    let (fx, fy) = (f(x), f(y));
    check_weights(fx, fy)?;
    Ok(log_ratio_sym(alpha * x.dist(y), fx, fy))
}

#[inline]
fn log_ratio(num: f64, den: f64) -> f64 {
    (num / den).ln_1p()
}

#[inline]
fn log_ratio_sym(num: f64, fx: f64, fy: f64) -> f64 {
    0.5 * ((num / fx).ln_1p() + (num / fy).ln_1p())
}

fn deltas(domain: &Domain, x: &Point, y: &Point) -> Result<(f64, f64)> {
    Ok((domain.boundary_distance(x)?, domain.boundary_distance(y)?))
}

/// Distance ratio metric `j_D(x, y) = log(1 + |x − y| / min(δ(x), δ(y)))`.
pub fn j_metric(domain: &Domain, x: &Point, y: &Point) -> Result<f64> {
    let (dx, dy) = deltas(domain, x, y)?;
    Ok(log_ratio(x.dist(y), dx.min(dy)))
}

/// Symmetric-product form `j'_D`.
pub fn j_prime_metric(domain: &Domain, x: &Point, y: &Point) -> Result<f64> {
    let (dx, dy) = deltas(domain, x, y)?;
    Ok(log_ratio_sym(x.dist(y), dx, dy))
}

/// `ζ_D(x, y) = log(1 + d(D)|x − y| / min(η(x), η(y)))`; equals `j_D` on
/// unbounded domains.
pub fn zeta(domain: &Domain, x: &Point, y: &Point) -> Result<f64> {
    let (dx, dy) = deltas(domain, x, y)?;
    match domain.diameter().finite() {
        Some(d) => {
            let (ex, ey) = (dx * (d - dx), dy * (d - dy));
            Ok(log_ratio(d * x.dist(y), ex.min(ey)))
        }
        None => Ok(log_ratio(x.dist(y), dx.min(dy))),
    }
}

/// `ζ'_D`; equals `j'_D` on unbounded domains.
pub fn zeta_prime(domain: &Domain, x: &Point, y: &Point) -> Result<f64> {
    let (dx, dy) = deltas(domain, x, y)?;
    match domain.diameter().finite() {
        Some(d) => {
            let (ex, ey) = (dx * (d - dx), dy * (d - dy));
            Ok(log_ratio_sym(d * x.dist(y), ex, ey))
        }
        None => Ok(log_ratio_sym(x.dist(y), dx, dy)),
    }
}

/// Hyperbolic distance on a ball (density `2r/(r² − |z − z₀|²)`) or a
/// half-space (density `1/δ(z)`).
///
/// Ball: `2 asinh(r|x − y| / √((r² − |x − z₀|²)(r² − |y − z₀|²)))`.
/// Half-space: `arccosh(1 + |x − y|²/(2 xₙ yₙ))`, evaluated as
/// `2 asinh(|x − y| / (2√(xₙ yₙ)))`.
pub fn hyperbolic_closed_form(domain: &Domain, x: &Point, y: &Point) -> Result<f64> {
    let (dx, dy) = deltas(domain, x, y)?;
    match domain.shape() {
        Shape::Ball { radius, .. } => {
            // r² − |z − z₀|² = δ (2r − δ) avoids cancellation near the sphere.
            let px = dx * (2.0 * radius - dx);
            let py = dy * (2.0 * radius - dy);
            Ok(2.0 * (radius * x.dist(y) / (px * py).sqrt()).asinh())
        }
        Shape::HalfSpace { .. } => Ok(2.0 * (x.dist(y) / (2.0 * (dx * dy).sqrt())).asinh()),
        other => Err(Error::UnsupportedShape {
            operation: "hyperbolic metric",
            shape: other.name(),
        }),
    }
}
