use thiserror::Error;

/// Errors produced by the sequence, series and graph routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series of order {order} cannot absorb {needed} derivative(s)")]
    OrderUnderflow { order: usize, needed: usize },

    #[error("composition requires an inner series with zero constant term")]
    CompositionDomain,

    #[error("outer series has {got} coefficients, composition at order {order} needs {needed}")]
    OuterTooShort {
        got: usize,
        needed: usize,
        order: usize,
    },

    #[error("parameter a = {0} must not be zero or a negative integer")]
    InvalidHurwitzParameter(String),

    #[error("non-integral value {value} from {context}")]
    NonIntegral {
        value: String,
        context: &'static str,
    },

    #[error("graph with {vertices} vertices and {edges} edges exceeds the limit for {operation}")]
    GraphTooLarge {
        vertices: usize,
        edges: usize,
        operation: &'static str,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
