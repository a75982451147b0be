use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),

    #[error("table entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("{kind} {index} is not a permutation of the group elements")]
    NotLatinSquare { kind: &'static str, index: usize },

    #[error("element 0 is not a two-sided identity")]
    IdentityNotZero,

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("group of order {order} exceeds the size limit {limit}")]
    SizeLimit { order: u128, limit: u128 },

    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),

    #[error("element {0} is central; Z(g) is only defined for noncentral elements")]
    CentralElement(String),

    #[error("group {0} is abelian")]
    AbelianGroup(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid edge set: {0}")]
    InvalidEdges(String),

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),

    #[error("partition is not a closed-twin partition: {0}")]
    NotTwinPartition(String),

    #[error("permutation moves vertex {vertex} outside its twin class")]
    PermutationCrossesClass { vertex: usize },

    #[error("graph has {vertices} vertices after twin reduction, above the isomorphism limit {limit}")]
    IsomorphismLimit { vertices: usize, limit: usize },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("unknown corpus entry `{0}`")]
    UnknownEntry(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
