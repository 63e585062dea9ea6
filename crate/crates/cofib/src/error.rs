use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("covers contain a directed cycle through {0}")]
    CycleError(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("cover pair ({0},{0}) is reflexive")]
    ReflexiveCover(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("index {index} out of range for {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("map is not monotone: {0}")]
    NotMonotone(String),
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("pushout is not a poset: {0}")]
    NotAPoset(String),
    #[error("not a cocone: {0}")]
    NotACocone(String),
    #[error("not a semilattice")]
    NotASemilattice,
    #[error("not a chain")]
    NotAChain,
    #[error("not a zigzag")]
    NotAZigzag,
    #[error("not a tree poset")]
    NotATree,
    #[error("no retraction exists")]
    NoRetraction,
    #[error("ill-formed retraction query: {0}")]
    IllFormedQuery(String),
    #[error("not in the small catalog: {0}")]
    NotInCatalog(String),
    #[error("no witness route: {0}")]
    NoWitness(String),
    #[error("certificate failed verification: {0}")]
    Unverified(String),
    #[error("parse error at {line}:{column}: {message}")]
    ParseError { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
