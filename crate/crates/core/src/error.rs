use alloc::string::String;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("input states are not orthonormal (max deviation {deviation:.3e})")]
    NonOrthonormalInput { deviation: f64 },

    #[error("matrix is not Hermitian (max |M - M^H| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("operator is not a valid projector: {0}")]
    InvalidProjector(String),

    #[error("grid oracle supports dA <= 2 and dB <= 3, got {d_a}x{d_b}")]
    DimensionTooLarge { d_a: usize, d_b: usize },

    #[error("state counts differ: {left} vs {right}")]
    CountMismatch { left: usize, right: usize },

    #[error("basis spans the whole space; its complement is empty")]
    CompleteBasisInput,

    #[error("density matrix is zero")]
    ZeroState,

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("basis is not complete: {states} states in dimension {dim}")]
    IncompleteBasis { states: usize, dim: usize },

    #[error("split is not valid for this basis")]
    InvalidSplit,

    #[error("no valid winding split after {applied} moves")]
    NoValidSplit { applied: usize },

    #[error("not a unitary matrix (max |U^H U - I| = {deviation:.3e})")]
    NotUnitary { deviation: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;
