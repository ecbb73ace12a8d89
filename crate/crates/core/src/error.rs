use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("singular matrix (rank {rank} of {order})")]
    Singular { rank: usize, order: usize },

    #[error("leading block singular")]
    LeadingBlockSingular,

    #[error("schur complement singular")]
    SchurComplementSingular,

    #[error("update matrix must have rank 1, found rank {0}")]
    NotRankOne(usize),

    #[error("update makes matrix singular")]
    UpdateMakesSingular,

    #[error("aI + bJ analysis requires a != 0")]
    ZeroDiagonalScalar,

    /// The `n = 6` book graphs have vanishing distance determinant.
    #[error("distance matrix singular (n=6, b≥2)")]
    SingularFamily,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph not connected")]
    NotConnected,

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("part N is empty; requires n ≥ 4")]
    EmptyPart,

    #[error("spectrum claim has total multiplicity {claimed}, matrix order is {order}")]
    ClaimOrderMismatch { claimed: usize, order: usize },

    /// A closed form failed its own exact self-check. Indicates a bug.
    #[error("internal check failed: {0}")]
    CheckFailed(String),
}
