use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("the two terminals must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("invalid vertex set for contraction: {0}")]
    Contract(String),

    #[error("graph has parallel edges; a simple graph is required")]
    Multigraph,

    #[error("graph is not bipartite; odd cycle through vertices {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },

    #[error("coloring covers {found} edges but the graph has {expected}")]
    ColoringMismatch { expected: usize, found: usize },

    #[error("colors must be positive integers (edge {edge} has color 0)")]
    ZeroColor { edge: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted ({0})")]
    BudgetExhausted(String),

    #[error("search budget exceeded; srd/rd bracketed in [{lower}, {upper}]")]
    BudgetExceeded { lower: u32, upper: u32 },

    #[error("assignment extraction failed: {0}")]
    Extraction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
