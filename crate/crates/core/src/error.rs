use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {dim}: at least {min} required")]
    InvalidDimension { dim: usize, min: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("truncation insufficient for |alpha| = {alpha_abs}: dim {dim} < required {required}")]
    TruncationInsufficient {
        alpha_abs: f64,
        dim: usize,
        required: usize,
    },

    #[error("level {n} does not fit in a truncated space of dimension {dim}")]
    LevelOutOfRange { n: usize, dim: usize },

    #[error("unsupported displaced number level {0}: only 0 and 1 are available")]
    UnsupportedLevel(usize),

    #[error("singular parameter: zeta = 0 makes -1/zeta unbounded")]
    SingularParameter,

    #[error("homogeneous coordinates (0, 0) do not name a point")]
    DegeneratePoint,

    #[error("state not normalized: squared norm {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("negative Gram determinant {determinant} beyond tolerance")]
    NumericalConsistency { determinant: f64 },

    #[error("{name} = {value} outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("closed-form concurrence {closed} disagrees with Gram value {gram}")]
    Discrepancy { closed: f64, gram: f64 },
}
