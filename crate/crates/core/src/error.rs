use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("unexpected character `{ch}` at offset {offset}")]
    UnexpectedChar { ch: char, offset: usize },
    #[error("unexpected {found} at offset {offset}, expected {expected}")]
    UnexpectedToken {
        found: String,
        expected: &'static str,
        offset: usize,
    },
    #[error("division by a non-constant or zero expression at offset {0}")]
    BadDivision(usize),
    #[error("exponent too large at offset {0}")]
    ExponentOverflow(usize),
    #[error("expression depends on `{0}`, which this context does not allow")]
    ForeignVariable(char),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("usage: {0}")]
    Usage(String),
    #[error("missing parameter `{param}` for case `{case}`")]
    MissingParam { case: &'static str, param: &'static str },
    /// A term with a negative exponent survived with a nonzero coefficient.
    #[error("negative exponent {exponent} with nonzero coefficient in {context}")]
    ExponentHazard { context: &'static str, exponent: i64 },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
