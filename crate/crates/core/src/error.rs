use thiserror::Error;

/// Errors raised by graph construction and the spectral evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge list is empty")]
    EmptyGraph,

    #[error("self-loop at vertex {vertex} (edge #{edge})")]
    SelfLoop { vertex: usize, edge: usize },

    #[error("duplicate edge ({u}, {v}) at edge #{edge}")]
    DuplicateEdge { u: usize, v: usize, edge: usize },

    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: usize },

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("symmetric eigensolver did not converge after {sweeps} sweeps")]
    EigensolverFailure { sweeps: usize },

    #[error("log-gamma pole at nonpositive integer {0}")]
    PoleAtNonpositiveInteger(f64),

    #[error("zeta pole at z = 1")]
    PoleAtOne,

    #[error("quantum spectral zeta has a pole at s = 1/2")]
    PoleAtHalf,

    #[error("Bernoulli order {0} exceeds the supported maximum of 60")]
    OrderTooLarge(usize),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("series did not reach tail tolerance {tolerance:e} within {terms} terms (bound {bound:e})")]
    NoConvergence { terms: usize, bound: f64, tolerance: f64 },

    #[error("Chebyshev coefficient form disagrees with cosine form at n = {n} by {difference:e}")]
    CoefficientMismatch { n: usize, difference: f64 },

    #[error("spectral determinant is degenerate: k_{index} L / 2 is a multiple of pi")]
    DegenerateDeterminant { index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
