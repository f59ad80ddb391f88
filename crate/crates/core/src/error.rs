use thiserror::Error;

/// Errors produced by graph construction, enumeration and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("invalid parameters for {family}: {reason}")]
    InvalidFamily { family: &'static str, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("automorphism group exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: u64 },

    #[error("enumeration of {required} candidate colorings exceeds the budget of {budget}")]
    ColoringBudget { required: u128, budget: u64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error(transparent)]
    Graph6(#[from] crate::io::graph6::Graph6Error),

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

impl Error {
    /// True for the two resource-budget variants.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::GroupTooLarge { .. } | Error::ColoringBudget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
