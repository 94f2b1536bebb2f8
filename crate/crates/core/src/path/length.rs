use crate::error::{Error, Result};
use crate::geom::{Domain, Point};
use crate::metrics::MetricKind;
use crate::path::{shortest_path_estimate, DensityField, GeodesicEstimate, PolylinePath, SolverConfig};

const MAX_DEPTH: u32 = 30;

/// Partition length `Σ d(γ(tᵢ₋₁), γ(tᵢ))` of `path` for a point-pair metric,
/// with every segment split into `2^depth` equal pieces.
///
/// By the triangle inequality the value is nondecreasing in `depth`.
pub fn metric_length<F>(mut metric: F, path: &PolylinePath, depth: u32) -> Result<f64>
where
    F: FnMut(&Point, &Point) -> Result<f64>,
{
    if depth > MAX_DEPTH {
        return Err(Error::InvalidArgument(format!("depth must be at most {MAX_DEPTH}")));
    }
    let pieces = 1u64 << depth;
    let mut total = 0.0;
    for (a, b) in path.segments() {
        let mut prev = a.clone();
        for i in 1..=pieces {
            let next = if i == pieces {
                b.clone()
            } else {
                a.lerp(b, i as f64 / pieces as f64)
            };
            total += metric(&prev, &next)?;
            prev = next;
        }
    }
    Ok(total)
}

/// [`metric_length`] for one of the closed-form metrics on `domain`.
pub fn closed_form_length(kind: MetricKind, domain: &Domain, path: &PolylinePath, depth: u32) -> Result<f64> {
    path.check_domain(domain)?;
    metric_length(|a, b| kind.closed_form(domain, a, b), path, depth)
}

#[derive(Clone, Debug)]
pub struct InnerMetricEstimate {
    /// Partition length of the candidate geodesic.
    pub value: f64,
    /// The candidate geodesic and its density length.
    pub candidate: GeodesicEstimate,
}

/// Upper-bound estimate of the inner metric of a closed-form metric: its
/// partition length along the geodesic estimate of `candidates`.
pub fn inner_metric_estimate(
    kind: MetricKind,
    candidates: &DensityField<'_>,
    x: &Point,
    y: &Point,
    cfg: &SolverConfig,
    depth: u32,
) -> Result<InnerMetricEstimate> {
    let domain = candidates.domain();
    let candidate = shortest_path_estimate(candidates, x, y, cfg)?;
    let value = if candidate.path.vertices().len() < 2 {
        0.0
    } else {
        metric_length(|a, b| kind.closed_form(domain, a, b), &candidate.path, depth)?
    };
    Ok(InnerMetricEstimate { value, candidate })
}
