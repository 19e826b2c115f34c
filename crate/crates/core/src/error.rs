use thiserror::Error;

/// Errors produced by the core operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("maps are defined over incompatible bases")]
    BasisMismatch,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("entry {src} -> {tgt} is not admissible for a degree {degree} map")]
    InadmissibleEntry {
        src: String,
        tgt: String,
        degree: i64,
    },

    #[error("differential does not square to zero")]
    DifferentialNotSquareZero,

    #[error("expected a reduced complex")]
    NotReduced,

    #[error("expected a normalized complex (nontorsion tower top in grading 0)")]
    NotNormalized,

    #[error("nontorsion tower top sits in odd grading")]
    OddNontorsionGrading,

    #[error("complex has {0} nontorsion towers, expected exactly one")]
    WrongTowerRank(usize),

    #[error("invalid parameter sequence: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    #[error("validation failed: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
