//! Error type shared by every operation in the crate.

use crate::classifier::FailingCondition;
use thiserror::Error;

/// Coarse classification used by callers (notably the CLI) to map errors
/// to exit codes: bad input, violated precondition, or a broken internal
/// self-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Input,
    Precondition,
    Internal,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("invalid label {found} on edge {{{u}, {v}}}: labels must be integers >= 2")]
    InvalidLabel { u: String, v: String, found: String },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: String, v: String },
    #[error("edge endpoint '{0}' is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("loop edge at vertex '{0}'")]
    LoopEdge(String),
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("subset violation: {0}")]
    SubsetViolation(String),
    #[error("vertex subset must be nonempty")]
    EmptySubset,
    #[error("graph is not chordal (induced cycle {})", cycle.join("-"))]
    NotChordal { cycle: Vec<String> },
    #[error("graph is not coherent ({0})")]
    NotCoherent(FailingCondition),
    #[error("split refinement impossible: {0}; the input graph is not coherent")]
    RefinementImpossible(String),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("the amalgamated subgraph is not free abelian: {0}")]
    DeltaNotFreeAbelian(String),
    #[error("no suitable splitting: {0}")]
    NoSuitableSplit(String),
    #[error("vertex '{0}' is adjacent to every other vertex; the splitting is degenerate")]
    DominatingVertex(String),
    #[error("requires an even Artin group of FC-type: {0}")]
    NotEvenFC(String),
    #[error("vertices '{u}' and '{v}' are adjacent")]
    VerticesAdjacent { u: String, v: String },
    #[error("internal self-check failed: {0}")]
    InternalInconsistency(String),
    #[error("input too large for brute-force search: {size} vertices (maximum {max})")]
    TooLarge { size: usize, max: usize },
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            MalformedInput(_)
            | InvalidLabel { .. }
            | DuplicateEdge { .. }
            | UnknownEndpoint(_)
            | LoopEdge(_)
            | UnknownVertex(_)
            | SubsetViolation(_)
            | EmptySubset
            | TooLarge { .. } => ErrorCategory::Input,
            NotChordal { .. }
            | NotCoherent(_)
            | RefinementImpossible(_)
            | InvalidSplit(_)
            | DeltaNotFreeAbelian(_)
            | NoSuitableSplit(_)
            | DominatingVertex(_)
            | NotEvenFC(_)
            | VerticesAdjacent { .. } => ErrorCategory::Precondition,
            InternalInconsistency(_) => ErrorCategory::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
