use thiserror::Error;

/// Errors shared across the crate.
///
/// The CLI maps these onto its exit-code contract: `Nonexistent`,
/// `GraphNonexistent` and `Unsupported`-style variants become exit code 3,
/// malformed input becomes exit code 2, and failed verification expectations
/// become exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not invertible in the ring of order {1}")]
    NotInvertible(u16, u16),

    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("alphabet mismatch between operands")]
    AlphabetMismatch,

    #[error("operation needs at least two codewords")]
    TooFewCodewords,

    #[error("size computation overflows 128-bit arithmetic: {0}")]
    Overflow(String),

    #[error("generator matrix is not in standard form (I_k | X)")]
    NotStandardForm,

    #[error("matrix rows are linearly dependent")]
    SingularMatrix,

    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),

    #[error("graph is not eulerian")]
    NotEulerian,

    #[error("edge {{{0}, {1}}} is not in the graph")]
    NoSuchEdge(usize, usize),

    #[error("no eulerian graph of order {order}, size {size} and girth >= {girth} exists")]
    GraphNonexistent {
        order: usize,
        size: usize,
        girth: usize,
    },

    #[error(
        "eulerian graph of order {order}, size {size}, girth >= {girth} unsupported: {reason}"
    )]
    GraphUnsupported {
        order: usize,
        size: usize,
        girth: usize,
        reason: String,
    },

    #[error("construction inapplicable: {0}")]
    Inapplicable(String),

    #[error("development seed rejected: {0}")]
    BadSeed(String),

    #[error("nonexistent: {0}")]
    Nonexistent(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("constructed code failed verification: expected pair-distance {expected}, scan found {found}")]
    VerificationFailed { expected: usize, found: usize },

    #[error("malformed file: {0}")]
    MalformedFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
