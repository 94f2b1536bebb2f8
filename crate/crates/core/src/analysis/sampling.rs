//! Seeded sampling of interior points, pairs and directions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{Domain, Point, Shape};

/// Seed used by every report unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 42;

const MAX_TRIES: usize = 100_000;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Box that rejection sampling draws from: the bounding box of a bounded
/// domain, or a cube of half-width 2 around a reference interior point.
pub fn sampling_box(domain: &Domain) -> (Point, Point) {
    if let Some(b) = domain.bounding_box() {
        return b;
    }
    let center = match domain.shape() {
        Shape::HalfSpace { normal, offset } => normal * (offset + 2.0),
        Shape::PuncturedSpace { puncture } => puncture.clone(),
        _ => Point::origin(domain.dim()),
    };
    (
        Point::from_iter_unchecked(center.coords().iter().map(|c| c - 2.0)),
        Point::from_iter_unchecked(center.coords().iter().map(|c| c + 2.0)),
    )
}

/// Uniform point of the domain (restricted to [`sampling_box`]) whose
/// boundary distance is at least `min_clearance`.
pub fn sample_interior<R: Rng>(domain: &Domain, rng: &mut R, min_clearance: f64) -> Result<Point> {
    let (lo, hi) = sampling_box(domain);
    for _ in 0..MAX_TRIES {
        let p = Point::from_iter_unchecked(
            lo.coords()
                .iter()
                .zip(hi.coords())
                .map(|(a, b)| rng.gen_range(*a..*b)),
        );
        if domain.clearance(&p) > min_clearance.max(0.0) {
            return Ok(p);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no interior point with clearance {min_clearance} found"
    )))
}

/// Two distinct interior points.
pub fn sample_pair<R: Rng>(domain: &Domain, rng: &mut R, min_clearance: f64) -> Result<(Point, Point)> {
    loop {
        let x = sample_interior(domain, rng, min_clearance)?;
        let y = sample_interior(domain, rng, min_clearance)?;
        if x != y {
            return Ok((x, y));
        }
    }
}

pub fn random_unit_vector<R: Rng>(dim: usize, rng: &mut R) -> Point {
    loop {
        let v = Point::from_iter_unchecked((0..dim).map(|_| rng.gen_range(-1.0..1.0)));
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return &v * (1.0 / n);
        }
    }
}

/// `n` deterministic, roughly even directions: equiangular in the plane, a
/// Fibonacci lattice on the 2-sphere, seeded random vectors otherwise.
pub fn sphere_directions(dim: usize, n: usize) -> Vec<Point> {
    match dim {
        2 => (0..n)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / n as f64;
                Point::xy(a.cos(), a.sin())
            })
            .collect(),
        3 => {
            let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
            (0..n)
                .map(|k| {
                    let z = 1.0 - (2.0 * k as f64 + 1.0) / n as f64;
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let a = golden * k as f64;
                    Point::xyz(r * a.cos(), r * a.sin(), z)
                })
                .collect()
        }
        _ => {
            let mut rng = seeded_rng(n as u64);
            (0..n).map(|_| random_unit_vector(dim, &mut rng)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_interior_and_reproducible() {
        let d = Domain::slit_disk(Point::xy(0.0, 0.0), 1.0, Point::xy(1.0, 0.0)).unwrap();
        let mut a = seeded_rng(7);
        let mut b = seeded_rng(7);
        for _ in 0..100 {
            let p = sample_interior(&d, &mut a, 1e-3).unwrap();
            assert!(d.boundary_distance(&p).unwrap() > 1e-3);
            assert_eq!(p, sample_interior(&d, &mut b, 1e-3).unwrap());
        }
    }

    #[test]
    fn unbounded_domains_sample() {
        let mut rng = seeded_rng(1);
        let h = Domain::upper_half_plane();
        for _ in 0..50 {
            let p = sample_interior(&h, &mut rng, 0.0).unwrap();
            assert!(p.coords()[1] > 0.0);
        }
        let s = Domain::punctured_space(Point::xyz(1.0, 0.0, 0.0));
        assert!(s.contains(&sample_interior(&s, &mut rng, 0.1).unwrap()).unwrap());
    }

    #[test]
    fn directions_are_unit() {
        for dim in [2, 3, 4] {
            let dirs = sphere_directions(dim, 37);
            assert_eq!(dirs.len(), 37);
            for v in dirs {
                assert!((v.norm() - 1.0).abs() < 1e-12);
            }
        }
        let mut rng = seeded_rng(3);
        assert!((random_unit_vector(3, &mut rng).norm() - 1.0).abs() < 1e-12);
    }
}
