//! Möbius transformations of ℝ̄ⁿ = ℝⁿ ∪ {∞}.
//!
//! A [`MobiusMap`] is a composition of translations, scalings about the
//! origin, orthogonal maps and sphere inversions, applied left to right.
//! Balls and half-spaces are closed under these maps as long as no
//! inversion center lies inside the domain, so [`MobiusMap::image_domain`]
//! tracks them exactly.
//!
//! Map descriptor:
//!
//! ```json
//! {"steps":[{"kind":"inversion","center":[-1,0],"radius":1.4142135623730951},
//!           {"kind":"scale","factor":2},
//!           {"kind":"translate","vector":[0,1]},
//!           {"kind":"orthogonal","matrix":[[0,-1],[1,0]]}]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Domain, Point, Shape};
use crate::metrics::{zeta, zeta_prime};

/// A point of ℝ̄ⁿ.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtPoint {
    Finite(Point),
    Infinity,
}

impl ExtPoint {
    pub fn finite(&self) -> Option<&Point> {
        match self {
            ExtPoint::Finite(p) => Some(p),
            ExtPoint::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Result<Point> {
        match self {
            ExtPoint::Finite(p) => Ok(p),
            ExtPoint::Infinity => Err(Error::PointAtInfinity),
        }
    }
}

impl From<Point> for ExtPoint {
    fn from(p: Point) -> Self {
        ExtPoint::Finite(p)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    Translate(Point),
    /// `z ↦ λz`, `λ > 0`.
    Scale(f64),
    /// `z ↦ Qz` with `QᵀQ = I`, stored row-major.
    Orthogonal { dim: usize, matrix: Vec<f64> },
    /// `z ↦ a + ρ²(z − a)/|z − a|²`.
    Inversion { center: Point, radius: f64 },
}

const ORTHOGONALITY_TOL: f64 = 1e-10;
/// Relative tolerance for an inversion center lying on a sphere or plane.
const INCIDENCE_TOL: f64 = 1e-12;

impl Primitive {
    pub fn translate(v: Point) -> Self {
        Primitive::Translate(v)
    }

    pub fn scale(factor: f64) -> Result<Self> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(Error::InvalidArgument(format!("scale factor must be positive, got {factor}")));
        }
        Ok(Primitive::Scale(factor))
    }

    pub fn orthogonal(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if dim < 2 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("orthogonal matrix must be square, n ≥ 2".into()));
        }
        let matrix: Vec<f64> = rows.iter().flatten().copied().collect();
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        for i in 0..dim {
            for j in 0..dim {
                let dot: f64 = (0..dim).map(|k| matrix[k * dim + i] * matrix[k * dim + j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                if (dot - expect).abs() > ORTHOGONALITY_TOL {
                    return Err(Error::InvalidArgument("matrix is not orthogonal".into()));
                }
            }
        }
        Ok(Primitive::Orthogonal { dim, matrix })
    }

    /// Rotation of the plane by `angle` radians.
    pub fn rotation_2d(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Primitive::Orthogonal {
            dim: 2,
            matrix: vec![c, -s, s, c],
        }
    }

    pub fn inversion(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidArgument(format!("inversion radius must be positive, got {radius}")));
        }
        Ok(Primitive::Inversion { center, radius })
    }

    fn dim(&self) -> Option<usize> {
        match self {
            Primitive::Translate(v) => Some(v.dim()),
            Primitive::Scale(_) => None,
            Primitive::Orthogonal { dim, .. } => Some(*dim),
            Primitive::Inversion { center, .. } => Some(center.dim()),
        }
    }

    pub fn is_similarity(&self) -> bool {
        !matches!(self, Primitive::Inversion { .. })
    }

    fn rotate(dim: usize, matrix: &[f64], p: &Point) -> Point {
        let c = p.coords();
        Point::from_iter_unchecked((0..dim).map(|i| (0..dim).map(|k| matrix[i * dim + k] * c[k]).sum()))
    }

    pub fn apply(&self, p: &ExtPoint) -> ExtPoint {
        let ExtPoint::Finite(p) = p else {
            return match self {
                Primitive::Inversion { center, .. } => ExtPoint::Finite(center.clone()),
                _ => ExtPoint::Infinity,
            };
        };
        ExtPoint::Finite(match self {
            Primitive::Translate(v) => p + v,
            Primitive::Scale(l) => p * *l,
            Primitive::Orthogonal { dim, matrix } => Self::rotate(*dim, matrix, p),
            Primitive::Inversion { center, radius } => {
                let rel = p - center;
                let r2 = rel.norm_sq();
                if r2 == 0.0 {
                    return ExtPoint::Infinity;
                }
                center.offset(&rel, radius * radius / r2)
            }
        })
    }

    fn image_shape(&self, shape: &Shape) -> Result<Domain> {
        let unsupported = |shape: &Shape| Error::UnsupportedShape {
            operation: "Möbius image",
            shape: shape.name(),
        };
        match (self, shape) {
            (Primitive::Translate(v), Shape::Ball { center, radius }) => Domain::ball(center + v, *radius),
            (Primitive::Translate(v), Shape::HalfSpace { normal, offset }) => {
                Domain::half_space(normal.clone(), offset + normal.dot(v))
            }
            (Primitive::Scale(l), Shape::Ball { center, radius }) => Domain::ball(center * *l, radius * l),
            (Primitive::Scale(l), Shape::HalfSpace { normal, offset }) => {
                Domain::half_space(normal.clone(), offset * l)
            }
            (Primitive::Orthogonal { dim, matrix }, Shape::Ball { center, radius }) => {
                Domain::ball(Self::rotate(*dim, matrix, center), *radius)
            }
            (Primitive::Orthogonal { dim, matrix }, Shape::HalfSpace { normal, offset }) => {
                Domain::half_space(Self::rotate(*dim, matrix, normal), *offset)
            }
            (Primitive::Inversion { center: a, radius: rho }, Shape::Ball { center: c, radius: r }) => {
                let rho2 = rho * rho;
                let ca = c - a;
                let d2 = ca.norm_sq();
                let power = d2 - r * r;
                if power.abs() <= INCIDENCE_TOL * d2.max(r * r) {
                    // a on the sphere: the image is the half-space bounded by
                    // the image of the sphere, on the side of the image of c.
                    let u = &ca * (1.0 / r);
                    let offset = u.dot(a) + rho2 / (2.0 * r);
                    Domain::half_space(u, offset)
                } else if power > 0.0 {
                    Domain::ball(a.offset(&ca, rho2 / power), rho2 * r / power)
                } else {
                    Err(unsupported(shape))
                }
            }
            (Primitive::Inversion { center: a, radius: rho }, Shape::HalfSpace { normal, offset }) => {
                let rho2 = rho * rho;
                let t = normal.dot(a) - offset;
                if t.abs() <= INCIDENCE_TOL * (1.0 + a.norm() + offset.abs()) {
                    Domain::half_space(normal.clone(), *offset)
                } else if t < 0.0 {
                    let radius = rho2 / (2.0 * t.abs());
                    Domain::ball(a.offset(normal, radius), radius)
                } else {
                    Err(unsupported(shape))
                }
            }
            (_, other) => Err(unsupported(other)),
        }
    }
}

/// Composition of primitives, applied in order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MobiusMap {
    steps: Vec<Primitive>,
}

impl MobiusMap {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(steps: Vec<Primitive>) -> Result<Self> {
        let mut dim = None;
        for s in &steps {
            if let Some(d) = s.dim() {
                match dim {
                    None => dim = Some(d),
                    Some(expected) if expected != d => {
                        return Err(Error::DimensionMismatch { expected, found: d })
                    }
                    _ => {}
                }
            }
        }
        Ok(Self { steps })
    }

    /// Appends `step` after the current steps.
    pub fn then(mut self, step: Primitive) -> Result<Self> {
        self.steps.push(step);
        Self::new(self.steps)
    }

    pub fn steps(&self) -> &[Primitive] {
        &self.steps
    }

    pub fn dim(&self) -> Option<usize> {
        self.steps.iter().find_map(Primitive::dim)
    }

    pub fn is_similarity(&self) -> bool {
        self.steps.iter().all(Primitive::is_similarity)
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        match self.dim() {
            Some(expected) if expected != dim => Err(Error::DimensionMismatch { expected, found: dim }),
            _ => Ok(()),
        }
    }

    pub fn apply(&self, p: &ExtPoint) -> Result<ExtPoint> {
        if let ExtPoint::Finite(q) = p {
            self.check_dim(q.dim())?;
        }
        Ok(self.steps.iter().fold(p.clone(), |acc, s| s.apply(&acc)))
    }

    pub fn apply_point(&self, p: &Point) -> Result<ExtPoint> {
        self.apply(&ExtPoint::Finite(p.clone()))
    }

    /// Exact image of a ball or half-space.
    pub fn image_domain(&self, domain: &Domain) -> Result<Domain> {
        self.check_dim(domain.dim())?;
        let mut current = domain.clone();
        for s in &self.steps {
            current = s.image_shape(current.shape())?;
        }
        Ok(current)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: MapSpec = serde_json::from_str(text)?;
        spec.build()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MapSpec::from_map(self)).expect("serializable map")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub steps: Vec<StepSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StepSpec {
    Translate { vector: Vec<f64> },
    Scale { factor: f64 },
    Orthogonal { matrix: Vec<Vec<f64>> },
    Inversion { center: Vec<f64>, radius: f64 },
}

impl MapSpec {
    pub fn build(&self) -> Result<MobiusMap> {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                StepSpec::Translate { vector } => Ok(Primitive::translate(Point::new(vector)?)),
                StepSpec::Scale { factor } => Primitive::scale(*factor),
                StepSpec::Orthogonal { matrix } => Primitive::orthogonal(matrix),
                StepSpec::Inversion { center, radius } => Primitive::inversion(Point::new(center)?, *radius),
            })
            .collect::<Result<Vec<_>>>()?;
        MobiusMap::new(steps)
    }

    pub fn from_map(map: &MobiusMap) -> Self {
        let steps = map
            .steps
            .iter()
            .map(|s| match s {
                Primitive::Translate(v) => StepSpec::Translate {
                    vector: v.coords().to_vec(),
                },
                Primitive::Scale(f) => StepSpec::Scale { factor: *f },
                Primitive::Orthogonal { dim, matrix } => StepSpec::Orthogonal {
                    matrix: matrix.chunks(*dim).map(<[f64]>::to_vec).collect(),
                },
                Primitive::Inversion { center, radius } => StepSpec::Inversion {
                    center: center.coords().to_vec(),
                    radius: *radius,
                },
            })
            .collect();
        MapSpec { steps }
    }
}

/// Absolute cross-ratio `|x − y||ξ − τ| / (|x − ξ||y − τ|)`.
pub fn cross_ratio(x: &Point, y: &Point, xi: &Point, tau: &Point) -> f64 {
    x.dist(y) * xi.dist(tau) / (x.dist(xi) * y.dist(tau))
}

/// Upper bound on `ζ_{f(D)}(f(x), f(y)) / ζ_D(x, y)` (and likewise for `ζ'`)
/// over all Möbius maps `f`.
pub const DISTORTION_BOUND: f64 = 4.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistortionViolation {
    pub metric: &'static str,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistortionReport {
    pub pairs_checked: usize,
    /// Coincident pairs, for which the ratio is undefined.
    pub pairs_skipped: usize,
    pub max_ratio_zeta: f64,
    pub max_ratio_zeta_prime: f64,
    pub bound: f64,
    pub violations: Vec<DistortionViolation>,
}

/// Ratios of `ζ` and `ζ'` after and before `map` on the given pairs of
/// interior points; ratios above `bound` are listed as violations.
pub fn mobius_distortion_check(
    map: &MobiusMap,
    domain: &Domain,
    pairs: &[(Point, Point)],
    bound: f64,
) -> Result<DistortionReport> {
    let image = map.image_domain(domain)?;
    let mut report = DistortionReport {
        pairs_checked: 0,
        pairs_skipped: 0,
        max_ratio_zeta: 0.0,
        max_ratio_zeta_prime: 0.0,
        bound,
        violations: Vec::new(),
    };
    for (x, y) in pairs {
        if x == y {
            report.pairs_skipped += 1;
            continue;
        }
        let fx = map.apply_point(x)?.into_finite()?;
        let fy = map.apply_point(y)?.into_finite()?;
        report.pairs_checked += 1;
        let metrics: [(&'static str, fn(&Domain, &Point, &Point) -> Result<f64>); 2] =
            [("zeta", zeta), ("zeta_prime", zeta_prime)];
        for (name, metric) in metrics {
            let before = metric(domain, x, y)?;
            let after = metric(&image, &fx, &fy)?;
            let ratio = after / before;
            let max = if name == "zeta" {
                &mut report.max_ratio_zeta
            } else {
                &mut report.max_ratio_zeta_prime
            };
            *max = max.max(ratio);
            if ratio > bound {
                report.violations.push(DistortionViolation {
                    metric: name,
                    x: x.coords().to_vec(),
                    y: y.coords().to_vec(),
                    ratio,
                });
            }
        }
    }
    Ok(report)
}
