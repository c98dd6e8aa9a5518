use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("outer order is not a permutation of 0..{0}")]
    BadOrder(usize),
    #[error("not maximal outerplanar: {0}")]
    NotMaximalOuterplanar(String),
    #[error("edges {0:?} and {1:?} cross under the given outer order")]
    WitnessInvalid((usize, usize), (usize, usize)),
    #[error("edge {0}-{1} is absent")]
    EdgeAbsent(usize, usize),
    #[error("graph has {n} vertices, fewer than the required {need}")]
    TooSmall { n: usize, need: usize },
    #[error("graph is not an outerpath")]
    NotOuterpath,
    #[error("k = {0} is below the supported minimum of 3")]
    KTooSmall(usize),
    #[error("merge precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no set satisfies {0}")]
    NotFound(String),
    #[error("strategy unavailable for k = {0}")]
    StrategyUnavailable(usize),
    #[error("exact search refused: {n} vertices exceeds the cap of {cap}")]
    ExactTooLarge { n: usize, cap: usize },
    #[error("no bound applies to n={n}, m={m}, d={d}, k={k}")]
    NoCaseApplies { n: usize, m: usize, d: usize, k: usize },
    #[error("parameters too small: {0}")]
    ParamsTooSmall(String),
    #[error("search budget exhausted before optimality was proven")]
    BudgetExhausted,
    #[error("n = {0} is outside the supported range 3..=14")]
    NTooLarge(usize),
    #[error("certificate invalid: {0}")]
    Certificate(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
