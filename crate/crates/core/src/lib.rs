//! Hyperbolic-type metrics on proper subdomains of ℝⁿ.
//!
//! Closed-form point-pair metrics (`j`, `j'`, `ζ`, `ζ'`, hyperbolic) live in
//! [`metrics`]; the path metrics `k` (quasihyperbolic) and `m` are estimated
//! numerically in [`path`].

pub mod analysis;
pub mod error;
pub mod format;
pub mod geom;
pub mod metrics;
pub mod path;
pub mod transforms;

pub use error::{Error, Result};
pub use geom::{Domain, DomainSpec, ExtendedReal, Point, Shape};
pub use metrics::MetricKind;
