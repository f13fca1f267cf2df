use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("unsupported symbol {symbol:?} at position {position}")]
    UnsupportedSymbol { symbol: String, position: usize },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph is not representable by a word")]
    NotRepresentable,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration of Bell({length}) = {required} words exceeds the cap of {cap}")]
    CapExceeded {
        length: usize,
        required: u128,
        cap: u128,
    },
    #[error("word {word} has {components} strong components but {factors} disjoint factors")]
    ComponentMismatch {
        word: String,
        components: usize,
        factors: usize,
    },
}
