use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 65536")]
    InvalidField(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("ideal is not admissible within max_len = {max_len}: paths of length {max_len} survive")]
    NotAdmissible { max_len: usize },

    #[error("path space of {paths} paths exceeds the limit of {limit}")]
    PathSpaceTooLarge { paths: usize, limit: usize },

    #[error("degenerate algebra: the idempotent at vertex {vertex} vanishes")]
    DegenerateAlgebra { vertex: usize },

    #[error("representation does not satisfy the relations: {0}")]
    RelationViolated(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("operation needs a nonzero module")]
    ZeroModule,

    #[error("period of S_{vertex} does not divide 4 ({period})")]
    PeriodHypothesisFails { vertex: usize, period: String },

    #[error("premise fails: {0}")]
    PremiseFails(String),

    #[error("algebra is not symmetric")]
    NotSymmetric,

    #[error("quiver is not connected")]
    NotConnected,

    #[error("symmetrizing form is missing or does not verify")]
    MissingForm,

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("census cap exceeded: {entries} free matrix entries for dimension vector {dimvec:?} (cap {cap})")]
    CensusCapExceeded {
        entries: usize,
        cap: usize,
        dimvec: Vec<usize>,
    },

    #[error("heart of P_{vertex} is undefined: P_{vertex} is simple")]
    HeartUndefined { vertex: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
