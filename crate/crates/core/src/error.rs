use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, MayerError>;

#[derive(Debug, Error)]
pub enum MayerError {
    #[error("order {0} is not a prime >= 2")]
    NotPrime(u32),
    #[error("cyclotomic operands live in different fields (N = {0} vs N = {1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("simplex must have at least one vertex")]
    EmptySimplex,
    #[error("duplicate vertex {0} in simplex")]
    DuplicateVertex(usize),
    #[error("face index {index} out of range for a simplex of dimension {dim}")]
    FaceOutOfRange { index: usize, dim: usize },
    #[error("invalid stage q = {q} for N = {n_diff} (need 1 <= q <= N-1)")]
    InvalidStage { q: usize, n_diff: u32 },
    #[error("filtration parameters out of order: a = {a} > b = {b}")]
    ParameterOrder { a: f64, b: f64 },
    #[error("face {face} has filtration value {face_value} above its coface {coface} ({coface_value})")]
    NonMonotone {
        face: String,
        face_value: f64,
        coface: String,
        coface_value: f64,
    },
    #[error("point cloud is empty")]
    EmptyPointCloud,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    RaggedPoints {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("negative multiplicity {multiplicity} at ({birth}, {death}) in channel n={n}, q={q}")]
    NegativeMultiplicity {
        n: usize,
        q: usize,
        birth: f64,
        death: f64,
        multiplicity: i64,
    },
    #[error("Laplacian is not positive semidefinite: eigenvalue {eigenvalue} below -{tolerance}")]
    NotPositiveSemidefinite { eigenvalue: f64, tolerance: f64 },
    #[error("Hermitian eigenvalue pairing failed: {0} and {1} should coincide")]
    NumericalDegeneracy(f64, f64),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("invalid distance exponent {0} (must be >= 1)")]
    InvalidExponent(f64),
    #[error("diagram families differ in channel: {0}")]
    ChannelMismatch(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl MayerError {
    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        MayerError::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}
