use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by the diagram, representation, quantization and bundle layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("diagram is not connected")]
    Disconnected,

    #[error("operation not supported for this algebra: {0}")]
    Unsupported(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("level mismatch: expected {expected}, got {got}")]
    LevelMismatch { expected: usize, got: usize },

    #[error("highest weight {weight:?} occurs with multiplicity {found}, need exactly one")]
    Multiplicity { weight: Vec<i64>, found: usize },

    #[error("spectrum is numerically degenerate near the rank cutoff: {0}")]
    DegenerateSpectrum(String),

    #[error("quadrature rule is insufficient: {0}")]
    QuadratureInsufficient(String),

    #[error("bundle weight is not admissible for this orbit: {0}")]
    Inadmissible(String),

    #[error("module is zero at this level")]
    ZeroModule,

    #[error("iteration failed to converge in {0}")]
    NoConvergence(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
