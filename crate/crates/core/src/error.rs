use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error in {input:?} at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
    #[error("{what} of size {size} exceeds the supported bound {bound}")]
    SizeBound {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("words share letters; multishuffle needs disjoint alphabets")]
    SharedAlphabet,
    #[error("malformed frozen tableau: {0}")]
    MalformedFrozen(String),
    #[error("block {0:?} is not independent in the graph")]
    DependentBlock(Vec<u32>),
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degree cap {cap} is below the key degree {degree}")]
    CapTooSmall { cap: usize, degree: usize },
    #[error("antipode of a PSym element is not constant on Knuth classes: {0}")]
    NotKnuthConstant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(input: &str, position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        position,
        message: message.into(),
    }
}
