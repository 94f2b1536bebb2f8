use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("points need at least 2 coordinates, got {0}")]
    InvalidDimension(usize),

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("point is not an interior point of the domain")]
    OutsideDomain,

    #[error("domain is unbounded; eta is undefined")]
    UnboundedDomain,

    #[error("weight function must be positive, got {0}")]
    NonPositiveWeight(f64),

    #[error("unsupported shape for {operation}: {shape}")]
    UnsupportedShape {
        operation: &'static str,
        shape: &'static str,
    },

    #[error("quadrature did not converge (segment too close to the boundary?)")]
    Quadrature,

    #[error("endpoints lie in different lattice components; increase resolution")]
    Disconnected,

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("point at infinity cannot be used here")]
    PointAtInfinity,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed descriptor: {0}")]
    Descriptor(#[from] serde_json::Error),
}
