use thiserror::Error;

use crate::charpoly::DimensionReport;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("invalid edge {edge:?}: {reason}")]
    InvalidEdge { edge: (usize, usize), reason: String },
    #[error("graph has no exchange with vertex 1")]
    NoExchange,
    #[error("vertex {0} does not form an exchange with vertex 1")]
    NotAnExchange(usize),
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("inconsistent system: {0}")]
    InconsistentSystem(String),
    #[error("field characteristic {characteristic} too small for matrices of size {size}")]
    FieldCharacteristicTooSmall { characteristic: u64, size: usize },
    #[error("graph has {m} edges, more than 2n-2 = {bound}")]
    TooManyEdges { m: usize, bound: usize },
    #[error("no identifiable scaling reparametrization: d = {} but m + 1 = {}", .0.d, .0.expected)]
    NoReparametrization(Box<DimensionReport>),
    #[error("graph does not have the expected dimension")]
    NotExpectedDimension,
    #[error("no cycle basis of the cycle lattice found")]
    BasisNotFound,
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
