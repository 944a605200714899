use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex {0}")]
    InvalidVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("twins ({0},{1})")]
    TwinsPresent(usize, usize),
    #[error("open twins ({0},{1})")]
    OpenTwinsPresent(usize, usize),
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
    #[error("degenerate interval for vertex {0}")]
    DegenerateInterval(usize),
    #[error("duplicate {0} index {1}")]
    DuplicateIndex(&'static str, i64),
    #[error("malformed cotree: {0}")]
    MalformedCotree(String),
    #[error("not a cograph")]
    NotCograph,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("k = {0} is too small for this construction")]
    KTooSmall(usize),
    #[error("k = {0} must be even")]
    BadParity(usize),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("no graph for n = {0} in variant {1}")]
    Unreachable(usize, u8),
    #[error("no bound for {0}")]
    UnsupportedCombination(String),
    #[error("metric dimension bounds need a diameter")]
    MissingDiameter,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("VerifierFailed {0}")]
    VerifierFailed(String),
    #[error("OLD recurrence has not passed its validation gate")]
    NotValidated,
    #[error("generated instance failed self-check: {0}")]
    SelfCheck(String),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
