use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed exponent in token `{0}`")]
    MalformedExponent(String),
    #[error("empty token in word")]
    EmptyToken,
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("symbol syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbalanced delimiters in symbol")]
    UnbalancedDelimiters,
    #[error("empty branch in symbol at byte {0}")]
    EmptyBranch(usize),
    #[error("presentation schema violation: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cutoff mismatch: {left} vs {right}")]
    CutoffMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("constant term is not 1; logarithm undefined")]
    NotGrouplike,
    #[error("`{0}` is not a Lyndon word")]
    NotLyndon(String),
    #[error("tensor is not a Lie element (fails at monomial `{0}`)")]
    NotPrimitive(String),
    #[error("tree symbol is not linear")]
    NotLinear,
    #[error("generator index {index} out of range for alphabet of size {size}")]
    GeneratorOutOfRange { index: usize, size: usize },
    #[error("weight cutoff must be at least 1")]
    ZeroCutoff,
    #[error("weight cutoff {requested} exceeds the configured cap {cap}")]
    CutoffTooLarge { requested: usize, cap: usize },
}

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::UnknownGenerator(_)
                | Error::MalformedExponent(_)
                | Error::EmptyToken
                | Error::InvalidName(_)
                | Error::DuplicateGenerator(_)
                | Error::EmptyAlphabet
                | Error::Syntax { .. }
                | Error::UnbalancedDelimiters
                | Error::EmptyBranch(_)
                | Error::Schema(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
