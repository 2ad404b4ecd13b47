use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    InvalidVertex(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph power exponent must be at least 1")]
    InvalidExponent,
    #[error("invalid permutation model: {0}")]
    InvalidModel(String),
    #[error("path endpoints must be two distinct vertices")]
    InvalidOrientation,
    #[error("edge list does not describe a tree")]
    InvalidTree,
    #[error("k = 1 is the tree itself; use the tree coloring instead")]
    UseTreeItself,
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("no clique-subtree spanning tree exists; graph is not split strongly chordal")]
    NotStronglyChordal,
    #[error("coloring was not produced by the matching coloring routine")]
    UnsupportedColoring,
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("coloring uses {0} colors, above the verifier cap of {1}")]
    OracleCapExceeded(usize, usize),
    #[error("graph has {0} vertices, above the exact-search cap of {1}")]
    ExactCapExceeded(usize, usize),
    #[error("exact search inconclusive within {0} colors")]
    Inconclusive(usize),
    #[error("instance generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
