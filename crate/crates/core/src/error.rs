use thiserror::Error;

/// Errors raised by the algebra, the group-action machinery and the CLI loaders.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials live over different variable sets")]
    RingMismatch,

    #[error("variable `{0}` is not part of the ring")]
    UnknownVariable(String),

    #[error("no image given for variable `{0}`")]
    UnmappedVariable(String),

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("matrix is singular")]
    Singular,

    #[error("expected a square format (m = n), got {m}x{n}")]
    NotSquare { m: usize, n: usize },

    #[error("no nontrivial invariant exists in this format ({m}x{n}x2: n != m + gcd(m, n))")]
    NoNontrivialInvariant { m: usize, n: usize },

    #[error("invariant ring is K ({m}x{n}x2: n > 2m)")]
    TrivialRing { m: usize, n: usize },

    #[error("unsupported format {m}x{n}x2: {reason}")]
    UnsupportedFormat { m: usize, n: usize, reason: String },

    #[error("not tabulated for n = {0}")]
    NotTabulated(usize),

    #[error("group element component does not have determinant 1")]
    NotUnimodular,

    #[error("graded piece has {size} monomials, above the limit of {limit}")]
    GradedPieceTooLarge { size: u128, limit: u128 },

    #[error("expansion exceeded {limit} terms (set TIV_MAX_TERMS to raise the limit)")]
    ExpansionTooLarge { limit: usize },

    #[error("tensor file: {0}")]
    TensorFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
