use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has no nonzero cells")]
    EmptyMatrix,
    #[error("row {line} has a different length from the first row")]
    RaggedRows { line: usize },
    #[error("bad token {token:?} at line {line}, column {col} (expected -1, 0 or 1)")]
    BadToken {
        line: usize,
        col: usize,
        token: String,
    },
    #[error("{what} too large: {actual} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("cell ({i},{j}) out of bounds for a {t}x{u} matrix")]
    OutOfBounds {
        i: usize,
        j: usize,
        t: usize,
        u: usize,
    },
    #[error("row-column graph contains a negative cycle: {}", cycle.join(" - "))]
    NegativeCycle { cycle: Vec<String> },
    #[error("polynomial has no root > 0 and no root at 0")]
    NoPositiveRoot,
    #[error("zero polynomial has no well-defined largest root")]
    ZeroPolynomial,
    #[error("{u} - {v} is not an edge")]
    NotAnEdge { u: String, v: String },
    #[error("edge {u} - {v} does not lie on a cycle")]
    EdgeNotOnCycle { u: String, v: String },
    #[error("expansion exceeded {limit} vertices")]
    ExpansionTooLarge { limit: usize },
    #[error("orientation violates the slope constraint at cell ({col},{row})")]
    InvalidOrientation { col: usize, row: usize },
    #[error("word symbol ({col},{row}) does not index a nonzero cell")]
    InvalidWord { col: usize, row: usize },
    #[error("enumeration budget exceeded: {words} words > {budget}")]
    BudgetExceeded { words: u128, budget: u128 },
    #[error("not enough data: need n_max >= 2 with positive counts")]
    InsufficientData,
    #[error("cycle length {0} invalid: row-column graphs are bipartite, so cycles have even length >= 4")]
    OddCycleLength(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("bad edge at line {line}: {reason}")]
    InvalidEdge { line: usize, reason: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
