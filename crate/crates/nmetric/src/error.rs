use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the inputs was violated (wrong arity, bad
    /// dimensions, out-of-range parameters, unknown identifiers).
    #[error("usage error: {0}")]
    Usage(String),

    /// The input to a Gram-determinant routine is not positive
    /// semidefinite beyond roundoff: a pivot fell below `-tol`.
    #[error("not a Gram matrix: pivot {pivot:e} below -{tol:e}")]
    InvalidGram { pivot: f64, tol: f64 },

    /// An iterative kernel failed to converge or produced values outside
    /// its certified range.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// The input is degenerate for the requested quantity (e.g. a
    /// dependent sub-tuple where independence is required).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Hypergraph distances are only defined on connected hypergraphs.
    #[error("hypergraph is not connected")]
    DisconnectedHypergraph,

    /// An internally built table failed its own exhaustive verification.
    /// This indicates a bug in the construction, never bad user input.
    #[error("construction bug: {0}")]
    ConstructionBug(String),

    /// The request exceeds a documented capacity guard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
