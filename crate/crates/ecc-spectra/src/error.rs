//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by graph construction, decomposition, exact linear algebra,
/// the eigensolver, the generators and the I/O layer.
#[derive(Debug, Error)]
pub enum Error {
    /// A self-loop was supplied; graphs here are simple.
    #[error("invalid edge: self-loop at vertex {0}")]
    InvalidEdge(usize),

    /// An edge endpoint does not lie in `0..n`.
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    /// Distances, eccentricities and everything downstream require a
    /// connected graph.
    #[error("graph is disconnected")]
    GraphDisconnected,

    /// The graph is not a clique tree whose blocks all have at most two
    /// cut-vertices.
    #[error("graph is not in the supported clique-tree class: {0}")]
    NotInCt(&'static str),

    /// The operation requires an odd diameter.
    #[error("operation requires an odd diameter, found {0}")]
    EvenDiameter(u32),

    /// The operation requires an even diameter.
    #[error("operation requires an even diameter, found {0}")]
    OddDiameter(u32),

    /// The operation requires a unique central vertex.
    #[error("expected a unique central vertex, found {0}")]
    MultipleCenters(usize),

    /// The diameter is below the minimum the operation is defined for.
    #[error("diameter {0} is too small for this operation")]
    DiameterTooSmall(u32),

    /// A requested order is below the minimum the operation is defined for.
    #[error("graph of order {0} is too small for this operation")]
    OrderTooSmall(usize),

    /// A row/column index exceeds the matrix order.
    #[error("index {index} out of range for matrix of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    /// Irreducibility is only defined for matrices of order greater than one.
    #[error("irreducibility requires a matrix of order > 1")]
    OrderOne,

    /// A principal-minor size outside `1..=order` was requested.
    #[error("minor size {size} out of range for matrix of order {order}")]
    SizeOutOfRange { size: usize, order: usize },

    /// The zero polynomial carries no spectral information.
    #[error("the zero polynomial has no roots to classify")]
    ZeroPolynomial,

    /// Witness-matrix parameter out of range.
    #[error("witness parameter k must be at least 1, got {0}")]
    KOutOfRange(usize),

    /// A generator or witness constructor received an out-of-range size.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The Jacobi sweep cap was reached before the off-diagonal mass fell
    /// under the requested tolerance.
    #[error("eigensolver did not converge within the sweep limit")]
    NoConvergence,

    /// Unknown built-in fixture name.
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    /// Malformed edge-list or matrix text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
