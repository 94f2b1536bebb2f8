//! Random Möbius maps that keep balls and half-spaces within that family.

use rand::Rng;

use crate::analysis::sampling::random_unit_vector;
use crate::error::{Error, Result};
use crate::geom::{Domain, Shape};
use crate::transforms::{MobiusMap, Primitive};

fn random_orthogonal<R: Rng>(dim: usize, rng: &mut R) -> Result<Primitive> {
    if dim == 2 {
        let a = rng.gen_range(0.0..std::f64::consts::TAU);
        let p = Primitive::rotation_2d(a);
        // Mix in reflections half of the time.
        if rng.gen_bool(0.5) {
            return Ok(p);
        }
    }
    // Householder reflection I − 2uuᵀ.
    let u = random_unit_vector(dim, rng);
    let rows: Vec<Vec<f64>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| f64::from(u8::from(i == j)) - 2.0 * u.coords()[i] * u.coords()[j])
                .collect()
        })
        .collect();
    Primitive::orthogonal(&rows)
}

/// Inversion whose center lies outside (or, with probability 1/3, on the
/// boundary of) a ball or half-space, so the image is again a ball or a
/// half-space.
fn random_inversion<R: Rng>(domain: &Domain, rng: &mut R) -> Result<Primitive> {
    let dim = domain.dim();
    let on_boundary = rng.gen_range(0..3) == 0;
    let center = match domain.shape() {
        Shape::Ball { center, radius } => {
            let k = if on_boundary { 1.0 } else { rng.gen_range(1.2..3.0) };
            center.offset(&random_unit_vector(dim, rng), k * radius)
        }
        Shape::HalfSpace { normal, offset } => {
            let mut foot = normal * *offset;
            for _ in 0..dim {
                let v = random_unit_vector(dim, rng);
                let tangential = &v - &(normal * v.dot(normal));
                foot = foot.offset(&tangential, rng.gen_range(-1.0..1.0));
            }
            let depth = if on_boundary { 0.0 } else { rng.gen_range(0.2..2.0) };
            foot.offset(normal, -depth)
        }
        other => {
            return Err(Error::UnsupportedShape {
                operation: "random Möbius map",
                shape: other.name(),
            })
        }
    };
    Primitive::inversion(center, rng.gen_range(0.5..2.0))
}

/// Composition of one to `max_steps` random translations, scalings,
/// orthogonal maps and inversions, together with the image of `domain`.
/// `domain` must be a ball or a half-space; so is the image.
pub fn random_mobius_map<R: Rng>(domain: &Domain, rng: &mut R, max_steps: usize) -> Result<(MobiusMap, Domain)> {
    let dim = domain.dim();
    let n = rng.gen_range(1..=max_steps.max(1));
    let mut steps = Vec::with_capacity(n);
    let mut image = domain.clone();
    for _ in 0..n {
        let step = match rng.gen_range(0..4) {
            0 => Primitive::translate(&random_unit_vector(dim, rng) * rng.gen_range(0.1..2.0)),
            1 => Primitive::scale(rng.gen_range(0.25..4.0))?,
            2 => random_orthogonal(dim, rng)?,
            _ => random_inversion(&image, rng)?,
        };
        image = MobiusMap::new(vec![step.clone()])?.image_domain(&image)?;
        steps.push(step);
    }
    Ok((MobiusMap::new(steps)?, image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::sampling::{sample_interior, seeded_rng};
    use crate::geom::Point;
    use crate::transforms::ExtPoint;

    #[test]
    fn images_stay_balls_or_half_spaces_and_contain_mapped_points() {
        let mut rng = seeded_rng(11);
        for start in [Domain::unit_disk(), Domain::ball(Point::origin(3), 1.0).unwrap()] {
            for _ in 0..40 {
                let (map, image) = random_mobius_map(&start, &mut rng, 3).unwrap();
                assert!(matches!(image.shape(), Shape::Ball { .. } | Shape::HalfSpace { .. }));
                let p = sample_interior(&start, &mut rng, 1e-3).unwrap();
                match map.apply_point(&p).unwrap() {
                    ExtPoint::Finite(q) => assert!(image.contains(&q).unwrap(), "{map:?} {p} {q}"),
                    ExtPoint::Infinity => panic!("interior point sent to infinity"),
                }
            }
        }
    }
}
