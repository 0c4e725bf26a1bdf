use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relations contain a cycle through element {0}")]
    CycleInCovers(usize),
    #[error("element index {index} out of range for a poset on {size} elements")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("relation matrix is not a strict partial order: {0}")]
    NotAnOrder(String),
    #[error("unknown catalog poset `{0}`")]
    UnknownName(String),
    #[error("bad parameter for catalog poset `{name}`: {reason}")]
    BadParam { name: String, reason: String },

    #[error("ground set size {0} exceeds the 64-element limit")]
    GroundSetTooLarge(usize),
    #[error("set {set} is not a subset of [{n}]")]
    SetOutOfRange { set: String, n: usize },
    #[error("duplicate member {0} in family")]
    DuplicateMember(String),
    #[error("required set {0} is not a member of the family")]
    RequiredNotMember(String),
    #[error("ground element {i} not in [1, {n}]")]
    BadIndex { i: usize, n: usize },
    #[error("{0} is not a perfect square >= 4")]
    NotPerfectSquare(usize),
    #[error("construction needs n >= 3, got {0}")]
    BadN(usize),
    #[error("construction needs n - 1 > l >= 2, got n = {n}, l = {l}")]
    BadParams { n: usize, l: usize },
    #[error(
        "forbidden poset list must be non-empty and every poset must have at least 2 elements"
    )]
    DegenerateForbidden,

    #[error("no ordered member pair (A, B) with A \\ B = {{{0}}}")]
    HypothesisFails(usize),
    #[error("vertex list is not an induced oriented cycle: {0}")]
    NotAnInducedCycle(String),
    #[error("brute-force enumeration on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid digraph: {0}")]
    BadDigraph(String),

    #[error("start family already contains a forbidden induced copy")]
    StartNotFree,
    #[error("family is not induced saturated: {0}")]
    NotSaturated(String),
    #[error("poset has no legs")]
    NoLegs,
    #[error("invalid search configuration: {0}")]
    BadConfig(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimitExceeded(String),
    #[error("proved property violated: {0}")]
    Violated(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
