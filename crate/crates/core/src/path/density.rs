use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{Domain, Point, Shape};
use crate::path::quadrature::adaptive_simpson;
use crate::path::PolylinePath;

const QUAD_MAX_DEPTH: u32 = 60;

/// Conformal weight defining a path metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DensityKind {
    /// `1/δ(z)`: the quasihyperbolic metric `k_D`.
    K,
    /// `d(D)/(δ(z)(d(D) − δ(z)))`: the metric `m_D`. Degrades to `K` on
    /// unbounded domains.
    M,
    /// `2r/(r² − |z − z₀|²)`: the hyperbolic metric of a ball.
    H,
}

impl DensityKind {
    pub fn name(self) -> &'static str {
        match self {
            DensityKind::K => "k",
            DensityKind::M => "m",
            DensityKind::H => "h",
        }
    }
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DensityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "k" => Ok(DensityKind::K),
            "m" => Ok(DensityKind::M),
            "h" => Ok(DensityKind::H),
            other => Err(Error::InvalidArgument(format!("unknown density `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Weight {
    InvDelta,
    Eta { diameter: f64 },
    Hyperbolic { radius: f64 },
}

/// A density kind bound to a domain.
#[derive(Clone, Copy, Debug)]
pub struct DensityField<'a> {
    kind: DensityKind,
    domain: &'a Domain,
    weight: Weight,
}

impl<'a> DensityField<'a> {
    pub fn new(kind: DensityKind, domain: &'a Domain) -> Result<Self> {
        let weight = match kind {
            DensityKind::K => Weight::InvDelta,
            DensityKind::M => match domain.diameter().finite() {
                Some(diameter) => Weight::Eta { diameter },
                None => Weight::InvDelta,
            },
            DensityKind::H => match domain.shape() {
                Shape::Ball { radius, .. } => Weight::Hyperbolic { radius: *radius },
                other => {
                    return Err(Error::UnsupportedShape {
                        operation: "hyperbolic density",
                        shape: other.name(),
                    })
                }
            },
        };
        Ok(Self {
            kind,
            domain,
            weight,
        })
    }

    pub fn kind(&self) -> DensityKind {
        self.kind
    }

    pub fn domain(&self) -> &'a Domain {
        self.domain
    }

    /// Density at an interior point.
    pub fn at(&self, z: &Point) -> Result<f64> {
        let delta = self.domain.boundary_distance(z)?;
        Ok(self.weight_from_delta(delta))
    }

    #[inline]
    fn weight_from_delta(&self, delta: f64) -> f64 {
        match self.weight {
            Weight::InvDelta => 1.0 / delta,
            Weight::Eta { diameter } => diameter / (delta * (diameter - delta)),
            // r² − |z − z₀|² = δ (2r − δ)
            Weight::Hyperbolic { radius } => 2.0 * radius / (delta * (2.0 * radius - delta)),
        }
    }

    /// Density without the interiority check; +∞ outside.
    #[inline]
    pub(crate) fn eval(&self, z: &Point) -> f64 {
        let delta = self.domain.clearance(z);
        if delta > 0.0 {
            self.weight_from_delta(delta)
        } else {
            f64::INFINITY
        }
    }

    /// Density-weighted length of the straight segment `[a, b]`, assuming the
    /// segment is interior.
    pub(crate) fn segment_length_unchecked(&self, a: &Point, b: &Point, rel_tol: f64) -> Result<f64> {
        let len = a.dist(b);
        if len == 0.0 {
            return Ok(0.0);
        }
        let v = adaptive_simpson(|t| self.eval(&a.lerp(b, t)), 0.0, 1.0, rel_tol, QUAD_MAX_DEPTH)
            .ok_or(Error::Quadrature)?;
        Ok(v * len)
    }

    /// Density-weighted length of the straight segment `[a, b]`.
    pub fn segment_length(&self, a: &Point, b: &Point, rel_tol: f64) -> Result<f64> {
        if !self.domain.segment_is_interior(a, b) {
            return Err(Error::InvalidPath("segment leaves the domain".into()));
        }
        self.segment_length_unchecked(a, b, rel_tol)
    }

    /// Closed-form lower bound on the path metric between two interior
    /// points: `ζ` for `m` and the hyperbolic ball metric, `j` for `k`.
    pub(crate) fn lower_bound(&self, x: &Point, dx: f64, y: &Point, dy: f64) -> f64 {
        let dist = x.dist(y);
        match self.weight {
            Weight::InvDelta => (dist / dx.min(dy)).ln_1p(),
            Weight::Eta { diameter: d } => {
                (d * dist / (dx * (d - dx)).min(dy * (d - dy))).ln_1p()
            }
            Weight::Hyperbolic { radius } => {
                let d = 2.0 * radius;
                (d * dist / (dx * (d - dx)).min(dy * (d - dy))).ln_1p()
            }
        }
    }
}

/// Integral of the density along a polyline, adaptive Simpson per segment
/// with relative tolerance `rel_tol`.
pub fn path_density_length(field: &DensityField<'_>, path: &PolylinePath, rel_tol: f64) -> Result<f64> {
    path.check_domain(field.domain())?;
    path.segments()
        .map(|(a, b)| field.segment_length_unchecked(a, b, rel_tol))
        .sum()
}
