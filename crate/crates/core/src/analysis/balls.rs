//! Euclidean and metric ball inclusions.

use serde::Serialize;

use crate::analysis::sampling::sphere_directions;
use crate::error::{Error, Result};
use crate::geom::{Domain, Point};
use crate::metrics::{self, MetricKind};

/// Radii with `B(x, r) ⊂ B_ζ(x, s) ⊂ B(x, R)`:
/// `r = (1 − e^{−s}) η(x)/d`, `R = (e^s − 1) η(x)/d`.
/// The same pair works for `m` balls.
pub fn zeta_ball_radii(s: f64, eta_x: f64, d: f64) -> Result<(f64, f64)> {
    for (name, v) in [("s", s), ("eta", eta_x), ("diameter", d)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidArgument(format!("{name} must be positive and finite, got {v}")));
        }
    }
    let q = eta_x / d;
    Ok((-(-s).exp_m1() * q, s.exp_m1() * q))
}

/// Radii with `B_ζ(x, r) ⊂ B_m(x, s) ⊂ B_ζ(x, s) ⊂ B_m(x, R)`:
/// `r = log(2 − e^{−s})`, `R = −log(2 − e^s)`, for `0 < s < log 2`.
pub fn zeta_m_ball_chain_radii(s: f64) -> Result<(f64, f64)> {
    if !(s > 0.0 && s < std::f64::consts::LN_2) {
        return Err(Error::InvalidArgument(format!("s must lie in (0, log 2), got {s}")));
    }
    Ok(((-(-s).exp_m1()).ln_1p(), -(-s.exp_m1()).ln_1p()))
}

/// Ball inclusions between two metrics related by fixed constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedFactorRelation {
    /// `B_j(x, s/2) ⊂ B_ζ(x, s) ⊂ B_j(x, s)`.
    ZetaVsJ,
    /// `B_j'(x, s/2) ⊂ B_ζ(x, s) ⊂ B_j'(x, s)`.
    ZetaVsJPrime,
    /// `B_j(x, s/2) ⊂ B_ζ'(x, s) ⊂ B_j(x, 2s)`.
    ZetaPrimeVsJ,
    /// `B_j'(x, s/2) ⊂ B_ζ'(x, s) ⊂ B_j'(x, 2s)`.
    ZetaPrimeVsJPrime,
    /// `B(x, r) ⊂ B_ζ'(x, s) ⊂ B(x, R)` with `r = (1 − e^{−s}) η/d`,
    /// `R = (e^{2s} − 1) η/d`.
    ZetaPrimeEuclidean,
}

impl FixedFactorRelation {
    pub const ALL: [FixedFactorRelation; 5] = [
        FixedFactorRelation::ZetaVsJ,
        FixedFactorRelation::ZetaVsJPrime,
        FixedFactorRelation::ZetaPrimeVsJ,
        FixedFactorRelation::ZetaPrimeVsJPrime,
        FixedFactorRelation::ZetaPrimeEuclidean,
    ];

    /// `(reference, ball)` metrics; the reference is `None` for Euclidean balls.
    pub fn metrics(self) -> (Option<MetricKind>, MetricKind) {
        use FixedFactorRelation::*;
        match self {
            ZetaVsJ => (Some(MetricKind::J), MetricKind::Zeta),
            ZetaVsJPrime => (Some(MetricKind::JPrime), MetricKind::Zeta),
            ZetaPrimeVsJ => (Some(MetricKind::J), MetricKind::ZetaPrime),
            ZetaPrimeVsJPrime => (Some(MetricKind::JPrime), MetricKind::ZetaPrime),
            ZetaPrimeEuclidean => (None, MetricKind::ZetaPrime),
        }
    }
}

/// `(r, R)` for `relation` at radius `s`. The Euclidean branch needs
/// `context = Some((η(x), d(D)))`.
pub fn fixed_factor_ball_radii(
    relation: FixedFactorRelation,
    s: f64,
    context: Option<(f64, f64)>,
) -> Result<(f64, f64)> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::InvalidArgument(format!("s must be positive and finite, got {s}")));
    }
    use FixedFactorRelation::*;
    match relation {
        ZetaVsJ | ZetaVsJPrime => Ok((s / 2.0, s)),
        ZetaPrimeVsJ | ZetaPrimeVsJPrime => Ok((s / 2.0, 2.0 * s)),
        ZetaPrimeEuclidean => {
            let (eta, d) = context.ok_or_else(|| {
                Error::InvalidArgument("Euclidean radii need η(x) and d(D)".into())
            })?;
            let (r, _) = zeta_ball_radii(s, eta, d)?;
            let (_, big_r) = zeta_ball_radii(2.0 * s, eta, d)?;
            Ok((r, big_r))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallViolation {
    /// `"inner"` when a point that must lie in the metric ball does not,
    /// `"outer"` when a point that must lie outside it does not.
    pub side: &'static str,
    pub point: Vec<f64>,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallInclusionReport {
    pub center: Vec<f64>,
    pub s: f64,
    pub inner_radius: f64,
    pub outer_radius: f64,
    pub samples_tested: usize,
    /// Samples outside the domain, or on a degenerate inner sphere.
    pub skipped: usize,
    pub violations: Vec<BallViolation>,
}

impl BallInclusionReport {
    fn new(x: &Point, s: f64, r: f64, big_r: f64) -> Self {
        Self {
            center: x.coords().to_vec(),
            s,
            inner_radius: r,
            outer_radius: big_r,
            samples_tested: 0,
            skipped: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `B(x, r) ⊂ B_d(x, s) ⊂ B(x, R)` on `n_samples` points of each of
/// the spheres `|z − x| = r − ε` (must have `d(x, z) < s`) and
/// `|z − x| = R + ε` (must have `d(x, z) ≥ s`). `metric` evaluates
/// `d(x, ·)`; `rel_tol` widens both tests by a factor `1 ± rel_tol` for
/// estimated metrics. Samples outside the domain are skipped.
#[allow(clippy::too_many_arguments)]
pub fn check_ball_inclusion<F>(
    domain: &Domain,
    mut metric: F,
    x: &Point,
    s: f64,
    radii: (f64, f64),
    n_samples: usize,
    eps: f64,
    rel_tol: f64,
) -> Result<BallInclusionReport>
where
    F: FnMut(&Point) -> Result<f64>,
{
    x.check_dim(domain.dim())?;
    if !domain.contains(x)? {
        return Err(Error::OutsideDomain);
    }
    let (r, big_r) = radii;
    let mut report = BallInclusionReport::new(x, s, r, big_r);
    let dirs = sphere_directions(domain.dim(), n_samples);
    for (side, radius) in [("inner", r - eps), ("outer", big_r + eps)] {
        for u in &dirs {
            if radius <= 0.0 {
                report.skipped += 1;
                continue;
            }
            let z = x.offset(u, radius);
            if !domain.contains(&z)? {
                report.skipped += 1;
                continue;
            }
            let value = match metric(&z) {
                Ok(v) => v,
                Err(Error::Disconnected) => {
                    report.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            report.samples_tested += 1;
            let bad = match side {
                "inner" => value >= s * (1.0 + rel_tol),
                _ => value < s * (1.0 - rel_tol),
            };
            if bad {
                report.violations.push(BallViolation {
                    side,
                    point: z.coords().to_vec(),
                    value,
                });
            }
        }
    }
    Ok(report)
}

/// First parameter `t ∈ (0, t_max)` with `f(t) ≥ level`, located by a
/// uniform scan followed by bisection down to `tol` (relative to `t`).
/// `None` when `f` stays below `level`.
pub fn ray_crossing<F>(mut f: F, level: f64, t_max: f64, tol: f64) -> Result<Option<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    const SCAN: usize = 32;
    let mut lo = 0.0;
    let mut hi = None;
    for k in 1..=SCAN {
        let t = t_max * k as f64 / SCAN as f64;
        if f(t)? >= level {
            hi = Some(t);
            break;
        }
        lo = t;
    }
    let Some(mut hi) = hi else {
        return Ok(None);
    };
    for _ in 0..200 {
        if hi - lo <= tol * hi.max(f64::MIN_POSITIVE) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid)? >= level {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

fn ray_limit(domain: &Domain) -> f64 {
    domain.diameter().finite().unwrap_or(1e6)
}

/// Boundary of the metric ball `{z : d(x, z) < s}` traced along `n_rays`
/// equiangular rays. Rays along which the ball reaches `∂D` return the
/// boundary point instead.
pub fn trace_metric_ball<F>(
    domain: &Domain,
    mut metric: F,
    x: &Point,
    s: f64,
    n_rays: usize,
    tol: f64,
) -> Result<Vec<Point>>
where
    F: FnMut(&Point) -> Result<f64>,
{
    if !domain.contains(x)? {
        return Err(Error::OutsideDomain);
    }
    let mut out = Vec::with_capacity(n_rays);
    for u in sphere_directions(domain.dim(), n_rays) {
        let exit = domain.ray_exit(x, &u, ray_limit(domain)) * (1.0 - 1e-12);
        let t = ray_crossing(|t| metric(&x.offset(&u, t)), s, exit, tol)?.unwrap_or(exit);
        out.push(x.offset(&u, t));
    }
    Ok(out)
}

/// Checks `B_ζ(x, r) ⊂ B_m(x, s) ⊂ B_ζ(x, s) ⊂ B_m(x, R)` on `n_rays` rays:
/// points just inside the `ζ`-sphere of radius `r` need `m < s`, points just
/// outside the `ζ`-sphere of radius `s` need `m ≥ s`, and points just inside
/// it need `m < R`. `m` evaluates `m(x, ·)`, widened by `rel_tol`.
pub fn check_chain_inclusion<F>(
    domain: &Domain,
    mut m: F,
    x: &Point,
    s: f64,
    n_rays: usize,
    rel_tol: f64,
) -> Result<BallInclusionReport>
where
    F: FnMut(&Point) -> Result<f64>,
{
    let (r, big_r) = zeta_m_ball_chain_radii(s)?;
    if !domain.contains(x)? {
        return Err(Error::OutsideDomain);
    }
    let mut report = BallInclusionReport::new(x, s, r, big_r);
    let step = 1e-6;
    for u in sphere_directions(domain.dim(), n_rays) {
        let exit = domain.ray_exit(x, &u, ray_limit(domain)) * (1.0 - 1e-12);
        let mut zeta_at = |t: f64| metrics::zeta(domain, x, &x.offset(&u, t));
        let tr = ray_crossing(&mut zeta_at, r, exit, 1e-12)?;
        let ts = ray_crossing(&mut zeta_at, s, exit, 1e-12)?;
        let mut probes = Vec::new();
        if let Some(t) = tr {
            probes.push(("inner", t * (1.0 - step), s));
        }
        if let Some(t) = ts {
            probes.push(("outer", (t * (1.0 + step)).min(exit), s));
            probes.push(("inner", t * (1.0 - step), big_r));
        }
        if probes.is_empty() {
            report.skipped += 1;
        }
        for (side, t, level) in probes {
            let z = x.offset(&u, t);
            let value = match m(&z) {
                Ok(v) => v,
                Err(Error::Disconnected) => {
                    report.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            report.samples_tested += 1;
            let bad = match side {
                "inner" => value >= level * (1.0 + rel_tol),
                _ => value < level * (1.0 - rel_tol),
            };
            if bad {
                report.violations.push(BallViolation {
                    side,
                    point: z.coords().to_vec(),
                    value,
                });
            }
        }
    }
    Ok(report)
}

/// Tests the inclusions of `relation` as implications on the given points:
/// `ref(x, z) < r ⇒ d(x, z) < s` and `d(x, z) < s ⇒ ref(x, z) < R`, where
/// the reference metric is Euclidean for [`FixedFactorRelation::ZetaPrimeEuclidean`].
pub fn check_fixed_factor_inclusion(
    domain: &Domain,
    relation: FixedFactorRelation,
    x: &Point,
    s: f64,
    points: &[Point],
) -> Result<BallInclusionReport> {
    let context = match domain.diameter().finite() {
        Some(d) => Some((domain.eta(x)?, d)),
        None => None,
    };
    let (r, big_r) = fixed_factor_ball_radii(relation, s, context)?;
    let (reference, ball) = relation.metrics();
    let mut report = BallInclusionReport::new(x, s, r, big_r);
    for z in points {
        if !domain.contains(z)? {
            report.skipped += 1;
            continue;
        }
        let rv = match reference {
            Some(kind) => kind.closed_form(domain, x, z)?,
            None => x.dist(z),
        };
        let bv = ball.closed_form(domain, x, z)?;
        report.samples_tested += 1;
        if rv < r && bv >= s {
            report.violations.push(BallViolation {
                side: "inner",
                point: z.coords().to_vec(),
                value: bv,
            });
        }
        if bv < s && rv >= big_r {
            report.violations.push(BallViolation {
                side: "outer",
                point: z.coords().to_vec(),
                value: rv,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn euclidean_radii_values() {
        let (r, big_r) = zeta_ball_radii(LN_2, 1.0, 2.0).unwrap();
        assert!((r - 0.25).abs() < 1e-15 && (big_r - 0.5).abs() < 1e-15);
        let (r, big_r) = zeta_ball_radii(1.0, 1.0, 2.0).unwrap();
        let e = std::f64::consts::E;
        assert!((r - (1.0 - 1.0 / e) / 2.0).abs() < 1e-15);
        assert!((big_r - (e - 1.0) / 2.0).abs() < 1e-15);
        let (r, big_r) = zeta_ball_radii(1e-6, 1.0, 2.0).unwrap();
        assert!((big_r / r - 1.0).abs() < 1e-5);
        assert!(zeta_ball_radii(0.0, 1.0, 2.0).is_err());
    }

    #[test]
    fn chain_radii_values() {
        let (r, big_r) = zeta_m_ball_chain_radii(0.5).unwrap();
        assert!((r - (2.0 - (-0.5f64).exp()).ln()).abs() < 1e-15);
        assert!((big_r - (1.0 / (2.0 - 0.5f64.exp())).ln()).abs() < 1e-14);
        assert!((r - 0.3317965657511862).abs() < 1e-12 && (big_r - 1.0461752700778737).abs() < 1e-12);
        let (r, big_r) = zeta_m_ball_chain_radii(1e-4).unwrap();
        assert!((big_r / r - 1.0).abs() < 1e-3);
        assert!(zeta_m_ball_chain_radii(LN_2 - 1e-5).unwrap().1 > 10.0);
        assert!(zeta_m_ball_chain_radii(LN_2).is_err());
        assert!(zeta_m_ball_chain_radii(-0.1).is_err());
    }

    #[test]
    fn fixed_factor_values() {
        use FixedFactorRelation::*;
        assert_eq!(fixed_factor_ball_radii(ZetaVsJ, 1.0, None).unwrap(), (0.5, 1.0));
        assert_eq!(fixed_factor_ball_radii(ZetaPrimeVsJ, 1.0, None).unwrap(), (0.5, 2.0));
        assert!(fixed_factor_ball_radii(ZetaPrimeEuclidean, 0.5, None).is_err());
        let (r, big_r) = fixed_factor_ball_radii(ZetaPrimeEuclidean, 0.5, Some((1.0, 2.0))).unwrap();
        assert!((r - 0.196735).abs() < 1e-6);
        assert!((big_r - 0.859141).abs() < 1e-6);
    }

    #[test]
    fn disk_zeta_ball_sandwich() {
        let d = Domain::unit_disk();
        let x = Point::xy(0.0, 0.0);
        let radii = zeta_ball_radii(LN_2, 1.0, 2.0).unwrap();
        let rep = check_ball_inclusion(&d, |z| metrics::zeta(&d, &x, z), &x, LN_2, radii, 500, 1e-6, 0.0)
            .unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.samples_tested, 1000);
    }

    #[test]
    fn wrong_radii_are_caught() {
        let d = Domain::unit_disk();
        let x = Point::xy(0.0, 0.0);
        let rep = check_ball_inclusion(&d, |z| metrics::zeta(&d, &x, z), &x, LN_2, (0.45, 0.3), 64, 1e-6, 0.0)
            .unwrap();
        assert!(rep.violations.iter().any(|v| v.side == "inner"));
        assert!(rep.violations.iter().any(|v| v.side == "outer"));
    }

    #[test]
    fn degenerate_inner_sphere_is_skipped() {
        let d = Domain::unit_disk();
        let x = Point::xy(0.0, 0.0);
        let rep = check_ball_inclusion(&d, |z| metrics::zeta(&d, &x, z), &x, 0.1, (1e-7, 0.5), 8, 1e-6, 0.0)
            .unwrap();
        assert_eq!(rep.skipped, 8);
    }

    #[test]
    fn traced_zeta_ball_in_disk_is_a_circle() {
        let d = Domain::unit_disk();
        let x = Point::xy(0.0, 0.0);
        // ζ(0, z) = log(1 + 2ρ/(1 − ρ²)) = s with a = e^s − 1 gives
        // aρ² + 2ρ − a = 0.
        let a = 1f64.exp_m1();
        let rho = ((1.0 + a * a).sqrt() - 1.0) / a;
        let pts = trace_metric_ball(&d, |z| metrics::zeta(&d, &x, z), &x, 1.0, 36, 1e-12).unwrap();
        for p in pts {
            assert!((p.norm() - rho).abs() < 1e-10);
        }
    }

    #[test]
    fn chain_holds_with_hyperbolic_metric() {
        let d = Domain::unit_disk();
        let x = Point::xy(0.0, 0.0);
        let rep = check_chain_inclusion(
            &d,
            |z| metrics::hyperbolic_closed_form(&d, &x, z),
            &x,
            0.3,
            16,
            0.0,
        )
        .unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.samples_tested, 48);
    }

    #[test]
    fn fixed_factor_implications_hold() {
        let d = Domain::unit_disk();
        let x = Point::xy(0.2, -0.1);
        let pts: Vec<Point> = (0..400)
            .map(|k| {
                let a = k as f64 * 0.7;
                let rad = 0.85 * ((k % 20) as f64 + 0.5) / 20.0;
                Point::xy(rad * a.cos(), rad * a.sin())
            })
            .collect();
        for rel in FixedFactorRelation::ALL {
            for s in [0.1, 0.5, 1.0, 2.0] {
                let rep = check_fixed_factor_inclusion(&d, rel, &x, s, &pts).unwrap();
                assert!(rep.passed(), "{rel:?} {s}: {:?}", rep.violations);
            }
        }
    }
}
