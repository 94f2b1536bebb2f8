use crate::error::{Error, Result};
use crate::geom::{ExtendedReal, Point};

/// Concrete domain shapes. Construct through the validating constructors on
/// [`Domain`]; the fields are exposed read-only through [`Domain::shape`].
#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    Ball {
        center: Point,
        radius: f64,
    },
    /// `{ p : normal · p > offset }` with a unit normal.
    HalfSpace {
        normal: Point,
        offset: f64,
    },
    /// Spherical shell `inner < |p - center| < outer`.
    Annulus {
        center: Point,
        inner: f64,
        outer: f64,
    },
    PuncturedBall {
        center: Point,
        radius: f64,
    },
    /// Planar disk minus the radial segment from the center to the circle
    /// along the unit vector `direction`.
    SlitDisk {
        center: Point,
        radius: f64,
        direction: Point,
    },
    /// Simple, counterclockwise planar polygon.
    Polygon {
        vertices: Vec<Point>,
    },
    PuncturedSpace {
        puncture: Point,
    },
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::Ball { .. } => "ball",
            Shape::HalfSpace { .. } => "half_space",
            Shape::Annulus { .. } => "annulus",
            Shape::PuncturedBall { .. } => "punctured_ball",
            Shape::SlitDisk { .. } => "slit_disk",
            Shape::Polygon { .. } => "polygon",
            Shape::PuncturedSpace { .. } => "punctured_space",
        }
    }
}

/// A proper subdomain of ℝⁿ with an exact boundary-distance function.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Domain {
    shape: Shape,
    dim: usize,
    diameter: ExtendedReal,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidShape(format!("{name} must be positive and finite, got {v}")))
    }
}

impl Domain {
    pub fn ball(center: Point, radius: f64) -> Result<Self> {
        positive("radius", radius)?;
        let dim = center.dim();
        Ok(Self {
            shape: Shape::Ball { center, radius },
            dim,
            diameter: ExtendedReal::Finite(2.0 * radius),
        })
    }

    /// The unit disk in the plane.
    pub fn unit_disk() -> Self {
        Self::ball(Point::origin(2), 1.0).expect("valid unit disk")
    }

    /// `normal` is normalized on construction.
    pub fn half_space(normal: Point, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidShape("offset must be finite".into()));
        }
        let normal = normal
            .normalized()
            .ok_or_else(|| Error::InvalidShape("half-space normal must be nonzero".into()))?;
        let dim = normal.dim();
        Ok(Self {
            shape: Shape::HalfSpace { normal, offset },
            dim,
            diameter: ExtendedReal::Infinite,
        })
    }

    /// The upper half-plane `x₁ > 0`.
    pub fn upper_half_plane() -> Self {
        Self::half_space(Point::xy(0.0, 1.0), 0.0).expect("valid half-plane")
    }

    pub fn annulus(center: Point, inner: f64, outer: f64) -> Result<Self> {
        positive("inner radius", inner)?;
        positive("outer radius", outer)?;
        if inner >= outer {
            return Err(Error::InvalidShape(format!(
                "annulus needs r < R, got r={inner}, R={outer}"
            )));
        }
        let dim = center.dim();
        Ok(Self {
            shape: Shape::Annulus {
                center,
                inner,
                outer,
            },
            dim,
            diameter: ExtendedReal::Finite(2.0 * outer),
        })
    }

    pub fn punctured_ball(center: Point, radius: f64) -> Result<Self> {
        positive("radius", radius)?;
        let dim = center.dim();
        Ok(Self {
            shape: Shape::PuncturedBall { center, radius },
            dim,
            diameter: ExtendedReal::Finite(2.0 * radius),
        })
    }

    pub fn slit_disk(center: Point, radius: f64, direction: Point) -> Result<Self> {
        positive("radius", radius)?;
        if center.dim() != 2 {
            return Err(Error::InvalidShape("slit disk is planar".into()));
        }
        direction.check_dim(2)?;
        let direction = direction
            .normalized()
            .ok_or_else(|| Error::InvalidShape("slit direction must be nonzero".into()))?;
        Ok(Self {
            shape: Shape::SlitDisk {
                center,
                radius,
                direction,
            },
            dim: 2,
            diameter: ExtendedReal::Finite(2.0 * radius),
        })
    }

    /// Simple counterclockwise polygon. Repeating the first vertex at the end
    /// is allowed and ignored.
    pub fn polygon(mut vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() >= 2 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        if vertices.len() < 3 {
            return Err(Error::InvalidShape("polygon needs at least 3 vertices".into()));
        }
        for v in &vertices {
            if v.dim() != 2 {
                return Err(Error::InvalidShape("polygon vertices must be planar".into()));
            }
        }
        validate_simple_ccw(&vertices)?;
        let mut diam: f64 = 0.0;
        for (i, a) in vertices.iter().enumerate() {
            for b in &vertices[i + 1..] {
                diam = diam.max(a.dist(b));
            }
        }
        Ok(Self {
            shape: Shape::Polygon { vertices },
            dim: 2,
            diameter: ExtendedReal::Finite(diam),
        })
    }

    pub fn punctured_space(puncture: Point) -> Self {
        let dim = puncture.dim();
        Self {
            shape: Shape::PuncturedSpace { puncture },
            dim,
            diameter: ExtendedReal::Infinite,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// d(D); +∞ for unbounded shapes.
    pub fn diameter(&self) -> ExtendedReal {
        self.diameter
    }

    pub fn is_bounded(&self) -> bool {
        self.diameter.is_finite()
    }

    /// Signed clearance: δ(p) for interior points, ≤ 0 otherwise (the
    /// negated distance to the boundary outside the closure, 0 on it).
    /// The dimension of `p` is not checked.
    pub fn clearance(&self, p: &Point) -> f64 {
        match &self.shape {
            Shape::Ball { center, radius } => radius - p.dist(center),
            Shape::HalfSpace { normal, offset } => normal.dot(p) - offset,
            Shape::Annulus {
                center,
                inner,
                outer,
            } => {
                let r = p.dist(center);
                (r - inner).min(outer - r)
            }
            Shape::PuncturedBall { center, radius } => {
                let r = p.dist(center);
                r.min(radius - r)
            }
            Shape::SlitDisk {
                center,
                radius,
                direction,
            } => {
                let rel = p - center;
                let r = rel.norm();
                let along = rel.dot(direction).clamp(0.0, *radius);
                let to_slit = rel.dist(&(direction * along));
                (radius - r).min(to_slit)
            }
            Shape::Polygon { vertices } => polygon_clearance(vertices, p),
            Shape::PuncturedSpace { puncture } => p.dist(puncture),
        }
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        p.check_dim(self.dim)?;
        Ok(self.clearance(p) > 0.0)
    }

    /// δ_D(p), the Euclidean distance from an interior point to ∂D.
    pub fn boundary_distance(&self, p: &Point) -> Result<f64> {
        p.check_dim(self.dim)?;
        let c = self.clearance(p);
        if c > 0.0 {
            Ok(c)
        } else {
            Err(Error::OutsideDomain)
        }
    }

    /// η_D(p) = δ(p) (d(D) − δ(p)); only defined for bounded domains.
    pub fn eta(&self, p: &Point) -> Result<f64> {
        let d = self.diameter.finite().ok_or(Error::UnboundedDomain)?;
        let delta = self.boundary_distance(p)?;
        Ok(delta * (d - delta))
    }

    /// True when the closed segment `[a, b]` lies in the open domain.
    ///
    /// Uses the 1-Lipschitz property of δ: the balls `B(a, δ(a))` and
    /// `B(b, δ(b))` lie in D and cover the segment once δ(a) + δ(b) > |a − b|;
    /// otherwise bisect. The answer is exact up to the bisection floor.
    pub fn segment_is_interior(&self, a: &Point, b: &Point) -> bool {
        let ca = self.clearance(a);
        let cb = self.clearance(b);
        if ca <= 0.0 || cb <= 0.0 {
            return false;
        }
        let len = a.dist(b);
        let floor = 1e-14 * (len + a.norm() + b.norm()).max(1e-300);
        let mut stack: Vec<(f64, f64, f64, f64)> = vec![(0.0, ca, 1.0, cb)];
        while let Some((t0, c0, t1, c1)) = stack.pop() {
            let piece = (t1 - t0) * len;
            if covered(c0, c1, piece) {
                continue;
            }
            if piece < floor || stack.len() > 200 {
                return false;
            }
            let tm = 0.5 * (t0 + t1);
            let cm = self.clearance(&a.lerp(b, tm));
            if cm <= 0.0 {
                return false;
            }
            stack.push((t0, c0, tm, cm));
            stack.push((tm, cm, t1, c1));
        }
        true
    }

    /// Axis-aligned bounding box `(lo, hi)` of a bounded domain.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let around = |c: &Point, r: f64| {
            (
                Point::from_iter_unchecked(c.coords().iter().map(|v| v - r)),
                Point::from_iter_unchecked(c.coords().iter().map(|v| v + r)),
            )
        };
        match &self.shape {
            Shape::Ball { center, radius }
            | Shape::PuncturedBall { center, radius }
            | Shape::SlitDisk { center, radius, .. } => Some(around(center, *radius)),
            Shape::Annulus { center, outer, .. } => Some(around(center, *outer)),
            Shape::Polygon { vertices } => {
                let mut lo = [f64::INFINITY; 2];
                let mut hi = [f64::NEG_INFINITY; 2];
                for v in vertices {
                    for k in 0..2 {
                        lo[k] = lo[k].min(v.coords()[k]);
                        hi[k] = hi[k].max(v.coords()[k]);
                    }
                }
                Some((Point::xy(lo[0], lo[1]), Point::xy(hi[0], hi[1])))
            }
            Shape::HalfSpace { .. } | Shape::PuncturedSpace { .. } => None,
        }
    }

    /// Distance from `p` (inside) along the unit direction `dir` to the first
    /// boundary crossing, by sphere tracing on δ. Returns `limit` when no
    /// crossing occurs before it.
    pub fn ray_exit(&self, p: &Point, dir: &Point, limit: f64) -> f64 {
        let mut t = 0.0;
        let scale = 1e-13 * (1.0 + p.norm() + limit);
        for _ in 0..100_000 {
            if t >= limit {
                return limit;
            }
            let c = self.clearance(&p.offset(dir, t));
            if c <= scale {
                return t;
            }
            t += c;
        }
        t.min(limit)
    }
}

/// Distance from `p` to the segment `[a, b]` (any dimension).
pub fn segment_distance(p: &Point, a: &Point, b: &Point) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(&ab) / len_sq).clamp(0.0, 1.0);
    p.dist(&a.lerp(b, t))
}

fn polygon_clearance(vertices: &[Point], p: &Point) -> f64 {
    let (px, py) = (p.coords()[0], p.coords()[1]);
    let mut min_d = f64::INFINITY;
    let mut inside = false;
    let n = vertices.len();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        min_d = min_d.min(segment_distance(p, a, b));
        let (ax, ay) = (a.coords()[0], a.coords()[1]);
        let (bx, by) = (b.coords()[0], b.coords()[1]);
        if (ay > py) != (by > py) {
            let x_cross = ax + (py - ay) * (bx - ax) / (by - ay);
            if px < x_cross {
                inside = !inside;
            }
        }
    }
    if min_d == 0.0 {
        0.0
    } else if inside {
        min_d
    } else {
        -min_d
    }
}

fn orient(a: &Point, b: &Point, c: &Point) -> f64 {
    let (a, b, c) = (a.coords(), b.coords(), c.coords());
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn segments_intersect(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |a: &Point, b: &Point, c: &Point, o: f64| o == 0.0 && segment_distance(c, a, b) == 0.0;
    on(q1, q2, p1, d1) || on(q1, q2, p2, d2) || on(p1, p2, q1, d3) || on(p1, p2, q2, d4)
}

fn validate_simple_ccw(v: &[Point]) -> Result<()> {
    let n = v.len();
    for i in 0..n {
        if v[i] == v[(i + 1) % n] {
            return Err(Error::InvalidShape("polygon has a zero-length edge".into()));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            if segments_intersect(&v[i], &v[(i + 1) % n], &v[j], &v[(j + 1) % n]) {
                return Err(Error::InvalidShape("polygon is not simple".into()));
            }
        }
    }
    let area2: f64 = (0..n)
        .map(|i| {
            let a = v[i].coords();
            let b = v[(i + 1) % n].coords();
            a[0] * b[1] - b[0] * a[1]
        })
        .sum();
    if area2 <= 0.0 {
        return Err(Error::InvalidShape(
            "polygon vertices must be counterclockwise".into(),
        ));
    }
    Ok(())
}

/// Whether balls of radii `c0`, `c1` centered at the ends of a piece of
/// length `len` overlap with a margin that survives rounding.
pub(crate) fn covered(c0: f64, c1: f64, len: f64) -> bool {
    c0 + c1 > len * (1.0 + 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn annulus() -> Domain {
        Domain::annulus(Point::origin(2), 1.0, 2.0).unwrap()
    }

    #[test]
    fn contains_examples() {
        let d = Domain::unit_disk();
        assert!(d.contains(&Point::xy(0.5, 0.0)).unwrap());
        assert!(!d.contains(&Point::xy(1.0, 0.0)).unwrap());
        let pb = Domain::punctured_ball(Point::origin(2), 1.0).unwrap();
        assert!(!pb.contains(&Point::xy(0.0, 0.0)).unwrap());
        assert!(matches!(
            d.contains(&Point::xyz(0.0, 0.0, 0.0)),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn annulus_boundary_distance_branches() {
        let a = annulus();
        assert!((a.boundary_distance(&Point::xy(1.25, 0.0)).unwrap() - 0.25).abs() < 1e-15);
        assert!((a.boundary_distance(&Point::xy(1.8, 0.0)).unwrap() - 0.2).abs() < 1e-15);
        assert!(matches!(
            a.boundary_distance(&Point::xy(0.5, 0.0)),
            Err(Error::OutsideDomain)
        ));
    }

    #[test]
    fn diameters() {
        assert_eq!(Domain::unit_disk().diameter(), ExtendedReal::Finite(2.0));
        assert_eq!(annulus().diameter(), ExtendedReal::Finite(4.0));
        assert_eq!(Domain::upper_half_plane().diameter(), ExtendedReal::Infinite);
        let sq = Domain::polygon(vec![
            Point::xy(0.0, 0.0),
            Point::xy(1.0, 0.0),
            Point::xy(1.0, 1.0),
            Point::xy(0.0, 1.0),
        ])
        .unwrap();
        assert!((sq.diameter().to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn eta_examples() {
        let a = annulus();
        assert!((a.eta(&Point::xy(1.25, 0.0)).unwrap() - 0.9375).abs() < 1e-15);
        let d = Domain::unit_disk();
        assert_eq!(d.eta(&Point::xy(0.0, 0.0)).unwrap(), 1.0);
        assert!((d.eta(&Point::xy(0.5, 0.0)).unwrap() - 0.75).abs() < 1e-15);
        assert!(matches!(
            Domain::upper_half_plane().eta(&Point::xy(0.0, 1.0)),
            Err(Error::UnboundedDomain)
        ));
    }

    #[test]
    fn slit_disk_excludes_slit() {
        let s = Domain::slit_disk(Point::origin(2), 1.0, Point::xy(1.0, 0.0)).unwrap();
        assert!(!s.contains(&Point::xy(0.5, 0.0)).unwrap());
        assert!(!s.contains(&Point::xy(0.0, 0.0)).unwrap());
        assert!(s.contains(&Point::xy(-0.5, 0.0)).unwrap());
        let d = s.boundary_distance(&Point::xy(0.5, 0.1)).unwrap();
        assert!((d - 0.1).abs() < 1e-15);
        let d = s.boundary_distance(&Point::xy(-0.3, 0.0)).unwrap();
        assert!((d - 0.3).abs() < 1e-15);
        assert!(!s.segment_is_interior(&Point::xy(0.5, 0.1), &Point::xy(0.5, -0.1)));
        assert!(s.segment_is_interior(&Point::xy(-0.5, 0.1), &Point::xy(-0.5, -0.1)));
    }

    #[test]
    fn polygon_validation() {
        let cw = vec![
            Point::xy(0.0, 0.0),
            Point::xy(0.0, 1.0),
            Point::xy(1.0, 1.0),
            Point::xy(1.0, 0.0),
        ];
        assert!(Domain::polygon(cw).is_err());
        let bowtie = vec![
            Point::xy(0.0, 0.0),
            Point::xy(1.0, 1.0),
            Point::xy(1.0, 0.0),
            Point::xy(0.0, 1.0),
        ];
        assert!(Domain::polygon(bowtie).is_err());
    }

    #[test]
    fn ray_exit_hits_circle() {
        let d = Domain::unit_disk();
        let t = d.ray_exit(&Point::xy(0.0, 0.0), &Point::xy(1.0, 0.0), 10.0);
        assert!((t - 1.0).abs() < 1e-10);
        let h = Domain::upper_half_plane();
        assert_eq!(h.ray_exit(&Point::xy(0.0, 1.0), &Point::xy(0.0, 1.0), 5.0), 5.0);
    }
}
