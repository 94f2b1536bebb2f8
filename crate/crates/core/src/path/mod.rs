//! Density fields, polyline paths and the numerical path metrics `k`, `m`.

mod density;
mod length;
mod polyline;
pub mod quadrature;
mod solver;

pub use density::{path_density_length, DensityField, DensityKind};
pub use length::{closed_form_length, inner_metric_estimate, metric_length, InnerMetricEstimate};
pub use polyline::PolylinePath;
pub use solver::{shortest_path_estimate, GeodesicEstimate, Resolution, SolverConfig, SolverDiagnostics};
