//! Domains, points, boundary distance δ, diameter d(D), and η = δ (d − δ).

mod descriptor;
mod domain;
mod point;

pub use descriptor::DomainSpec;
pub(crate) use domain::covered;
pub use domain::{segment_distance, Domain, Shape};
pub use point::{ExtendedReal, Point};
