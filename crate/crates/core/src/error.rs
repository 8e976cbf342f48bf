use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid radial grid: {0}")]
    InvalidGrid(String),

    #[error("integrand is not finite at r = {r} (value {value})")]
    NonFinite { r: f64, value: f64 },

    #[error("quadrature did not converge: best estimate {estimate}, error estimate {error}")]
    NotConverged { estimate: f64, error: f64 },

    #[error("vanishing density at r = {r}")]
    VanishingDensity { r: f64 },

    #[error("poles at r = {first} and r = {second} are too close for principal-value integration")]
    OverlappingPoles { first: f64, second: f64 },

    #[error("residue estimate at pole r = {pole} did not converge (left {left}, right {right})")]
    ResidueNotConverged { pole: f64, left: f64, right: f64 },

    #[error("insufficient samples: {got} given, at least {need} required")]
    InsufficientSamples { got: usize, need: usize },

    #[error("tabulated data: {0}")]
    Table(String),

    #[error("eigenvalue not bracketed: {0}")]
    NotBracketed(String),

    #[error("density normalization {found} differs from {expected}")]
    Normalization { found: f64, expected: f64 },

    #[error("STO basis {path}: {kind}")]
    Basis { path: String, kind: BasisError },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Validation failures of an STO basis file.
#[derive(Debug, Error)]
pub enum BasisError {
    #[error("schema violation: {0}")]
    Schema(String),

    #[error("invalid field {field}: {reason}")]
    Field { field: String, reason: String },

    #[error("orbital {orbital} is not normalized (norm {norm})")]
    NotNormalized { orbital: String, norm: f64 },

    #[error("orbitals {a} and {b} are not orthogonal (overlap {overlap})")]
    NotOrthogonal { a: String, b: String, overlap: f64 },

    #[error("electron count mismatch: declared {declared}, occupations sum to {sum}")]
    ElectronCount { declared: f64, sum: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for failures caused by bad input data rather than numerics.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::Basis { .. } | Error::Io { .. } | Error::Table(_) | Error::InsufficientSamples { .. }
        )
    }
}
