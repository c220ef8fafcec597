use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at column {column} in graph spec `{input}`: {message}")]
    Syntax {
        input: String,
        column: usize,
        message: String,
    },

    #[error("edge list line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has {vertices} vertices, above the vertex cap of {cap}")]
    VertexCap { vertices: usize, cap: usize },

    #[error("enumeration needs {required} vertex maps, above the budget of {budget}")]
    EnumerationBudget { required: u128, budget: u64 },

    #[error("search exceeded the node budget of {budget}")]
    SearchBudget { budget: u64 },

    #[error("operation requires a graph with at least one edge")]
    Edgeless,

    #[error("weight function does not match graph: {0}")]
    DomainMismatch(String),

    #[error("vertex map is not optimal: measure {measure} differs from the supplied optimum {optimum}")]
    NonOptimal { measure: String, optimum: String },

    #[error("optimum is zero, induced weight undefined")]
    ZeroOptimum,

    #[error("malformed linear program: {0}")]
    MalformedLp(String),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("sandwich premise fails: no homomorphism {0}")]
    SandwichPremise(String),

    #[error("no bound derivable: {0}")]
    NoBoundDerivable(String),
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    ResourceCap,
    Computation,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::VertexCap { .. } | Error::EnumerationBudget { .. } | Error::SearchBudget { .. } => {
                ErrorKind::ResourceCap
            }
            Error::Syntax { .. }
            | Error::Format { .. }
            | Error::Io { .. }
            | Error::InvalidParameter(_)
            | Error::InvalidGraph(_)
            | Error::Edgeless
            | Error::DomainMismatch(_)
            | Error::SandwichPremise(_) => ErrorKind::Usage,
            _ => ErrorKind::Computation,
        }
    }
}
