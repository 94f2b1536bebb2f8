//! Uniformity diagnostics: `m_D / ζ_D` ratios and the `ζ ≤ k` comparison.

use serde::Serialize;

use crate::analysis::sampling::{sample_pair, seeded_rng};
use crate::analysis::PairViolation;
use crate::error::{Error, Result};
use crate::geom::{Domain, Point, Shape};
use crate::metrics::MetricKind;
use crate::path::{shortest_path_estimate, DensityField, DensityKind, SolverConfig};

/// Sampled pairs keep at least this fraction of the diameter from `∂D`.
pub const PAIR_CLEARANCE: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniformityEstimate {
    pub pairs_tested: usize,
    /// Coincident pairs and pairs the solver could not connect.
    pub pairs_skipped: usize,
    pub max_ratio: f64,
    pub argmax_pair: Option<(Vec<f64>, Vec<f64>)>,
}

fn check_beta(beta: MetricKind) -> Result<()> {
    match beta {
        MetricKind::Zeta | MetricKind::ZetaPrime => Ok(()),
        other => Err(Error::InvalidArgument(format!(
            "uniformity ratios compare m with zeta or zeta', not {}",
            other.name()
        ))),
    }
}

/// Largest `m_est(x, y) / β(x, y)` over the given pairs, `β ∈ {ζ, ζ'}`.
pub fn uniformity_ratio_on_pairs(
    domain: &Domain,
    pairs: &[(Point, Point)],
    cfg: &SolverConfig,
    beta: MetricKind,
) -> Result<UniformityEstimate> {
    check_beta(beta)?;
    if !domain.is_bounded() {
        return Err(Error::UnboundedDomain);
    }
    let field = DensityField::new(DensityKind::M, domain)?;
    let mut est = UniformityEstimate {
        pairs_tested: 0,
        pairs_skipped: 0,
        max_ratio: f64::NAN,
        argmax_pair: None,
    };
    for (x, y) in pairs {
        if x == y {
            est.pairs_skipped += 1;
            continue;
        }
        let m = match shortest_path_estimate(&field, x, y, cfg) {
            Ok(g) => g.value,
            Err(Error::Disconnected) => {
                est.pairs_skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let ratio = m / beta.closed_form(domain, x, y)?;
        est.pairs_tested += 1;
        if !(ratio <= est.max_ratio) {
            est.max_ratio = ratio;
            est.argmax_pair = Some((x.coords().to_vec(), y.coords().to_vec()));
        }
    }
    Ok(est)
}

/// [`uniformity_ratio_on_pairs`] over `n_pairs` seeded random interior pairs.
pub fn uniformity_ratio(
    domain: &Domain,
    n_pairs: usize,
    cfg: &SolverConfig,
    beta: MetricKind,
    seed: u64,
) -> Result<UniformityEstimate> {
    let d = domain.diameter().finite().ok_or(Error::UnboundedDomain)?;
    let mut rng = seeded_rng(seed);
    let pairs = (0..n_pairs)
        .map(|_| sample_pair(domain, &mut rng, PAIR_CLEARANCE * d))
        .collect::<Result<Vec<_>>>()?;
    uniformity_ratio_on_pairs(domain, &pairs, cfg, beta)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StraddleRatio {
    pub eps: f64,
    pub m: f64,
    pub zeta: f64,
    pub ratio: f64,
}

/// Mirror-image pairs at distance `ε` on either side of the slit midpoint.
pub fn slit_straddle_pair(domain: &Domain, eps: f64) -> Result<(Point, Point)> {
    let Shape::SlitDisk {
        center,
        radius,
        direction,
    } = domain.shape()
    else {
        return Err(Error::UnsupportedShape {
            operation: "slit straddling pairs",
            shape: domain.shape().name(),
        });
    };
    let mid = center.offset(direction, 0.5 * radius);
    let normal = Point::xy(-direction.coords()[1], direction.coords()[0]);
    Ok((mid.offset(&normal, eps), mid.offset(&normal, -eps)))
}

/// `m_est / ζ` for the straddling pair at each `ε`. In a uniform domain the
/// ratio stays bounded; across the slit it grows without bound as `ε → 0`.
pub fn slit_straddle_ratios(domain: &Domain, eps: &[f64], cfg: &SolverConfig) -> Result<Vec<StraddleRatio>> {
    let field = DensityField::new(DensityKind::M, domain)?;
    eps.iter()
        .map(|&e| {
            let (x, y) = slit_straddle_pair(domain, e)?;
            let m = shortest_path_estimate(&field, &x, &y, cfg)?.value;
            let zeta = MetricKind::Zeta.closed_form(domain, &x, &y)?;
            Ok(StraddleRatio {
                eps: e,
                m,
                zeta,
                ratio: m / zeta,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaKReport {
    pub checked: usize,
    pub skipped: usize,
    /// Largest `ζ / k_est`.
    pub max_ratio: f64,
    pub violations: Vec<PairViolation>,
}

/// Checks `ζ(x, y) ≤ k_est(x, y)` (up to the quadrature tolerance of `cfg`)
/// on a slit disk. Since `k_est ≥ k`, a violation means `ζ > k` as well.
pub fn nonuniform_zeta_k_check(
    domain: &Domain,
    pairs: &[(Point, Point)],
    cfg: &SolverConfig,
) -> Result<ZetaKReport> {
    if !matches!(domain.shape(), Shape::SlitDisk { .. }) {
        return Err(Error::UnsupportedShape {
            operation: "zeta/k comparison",
            shape: domain.shape().name(),
        });
    }
    let field = DensityField::new(DensityKind::K, domain)?;
    let mut report = ZetaKReport {
        checked: 0,
        skipped: 0,
        max_ratio: 0.0,
        violations: Vec::new(),
    };
    for (x, y) in pairs {
        let zeta = MetricKind::Zeta.closed_form(domain, x, y)?;
        let k = match shortest_path_estimate(&field, x, y, cfg) {
            Ok(g) => g.value,
            Err(Error::Disconnected) => {
                report.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        report.checked += 1;
        if k > 0.0 {
            report.max_ratio = report.max_ratio.max(zeta / k);
        }
        if zeta > k * (1.0 + cfg.quad_tol) {
            report.violations.push(PairViolation::new(x, y, zeta, k));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slit() -> Domain {
        Domain::slit_disk(Point::xy(0.0, 0.0), 1.0, Point::xy(1.0, 0.0)).unwrap()
    }

    #[test]
    fn disk_radial_ratios_stay_below_two() {
        let d = Domain::unit_disk();
        let pairs: Vec<_> = [0.1, 0.5, 0.9]
            .iter()
            .map(|&t| (Point::xy(0.0, 0.0), Point::xy(t, 0.0)))
            .collect();
        let est = uniformity_ratio_on_pairs(&d, &pairs, &SolverConfig::default(), MetricKind::Zeta).unwrap();
        assert_eq!(est.pairs_tested, 3);
        assert!(est.max_ratio >= 1.0 && est.max_ratio <= 2.0 + 1e-6, "{est:?}");
    }

    #[test]
    fn coincident_pairs_are_skipped() {
        let d = Domain::unit_disk();
        let p = Point::xy(0.1, 0.2);
        let est =
            uniformity_ratio_on_pairs(&d, &[(p.clone(), p)], &SolverConfig::default(), MetricKind::Zeta).unwrap();
        assert_eq!((est.pairs_tested, est.pairs_skipped), (0, 1));
        assert!(est.argmax_pair.is_none());
    }

    #[test]
    fn rejects_other_metrics_and_unbounded_domains() {
        let cfg = SolverConfig::default();
        assert!(uniformity_ratio_on_pairs(&Domain::unit_disk(), &[], &cfg, MetricKind::J).is_err());
        assert!(matches!(
            uniformity_ratio(&Domain::upper_half_plane(), 1, &cfg, MetricKind::Zeta, 1),
            Err(Error::UnboundedDomain)
        ));
    }

    #[test]
    fn straddle_pairs_are_symmetric() {
        let (x, y) = slit_straddle_pair(&slit(), 1e-2).unwrap();
        assert_eq!(x.coords(), &[0.5, 1e-2]);
        assert_eq!(y.coords(), &[0.5, -1e-2]);
        assert!(slit_straddle_pair(&Domain::unit_disk(), 1e-2).is_err());
    }

    #[test]
    fn zeta_k_check_across_the_slit() {
        let d = slit();
        let (x, y) = slit_straddle_pair(&d, 0.05).unwrap();
        let cfg = SolverConfig::with_spacing(0.05);
        let rep = nonuniform_zeta_k_check(&d, &[(x.clone(), y), (x.clone(), x)], &cfg).unwrap();
        assert_eq!(rep.checked, 2);
        assert!(rep.violations.is_empty(), "{rep:?}");
    }
}
