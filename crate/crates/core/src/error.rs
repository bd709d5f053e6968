use thiserror::Error;

use crate::witness::Witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pair {{{0},{1}}} has no color")]
    MissingPair(usize, usize),

    #[error("pair {{{u},{v}}} has color {color}, outside palette 1..={palette}")]
    ColorOutOfRange {
        u: usize,
        v: usize,
        color: u8,
        palette: u8,
    },

    #[error("palette must hold between 1 and 255 colors, got {0}")]
    BadPalette(usize),

    #[error("{n} vertices exceed the {max}-vertex limit of this graph width")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex subset is empty")]
    EmptySubset,

    #[error("expected {expected} parts, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("Dirac condition fails at vertex {vertex}: degree {degree} < {n}/2")]
    DiracPreconditionFailed {
        vertex: usize,
        degree: usize,
        n: usize,
    },

    #[error("degree condition fails at vertex {vertex}: d_R + d_B = {degree} < {required}")]
    DegreePreconditionFailed {
        vertex: usize,
        degree: usize,
        required: usize,
    },

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("coloring contains a rainbow triangle {:?}", .0.vertices)]
    NotGallai(Witness),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("construction needs {order} vertices, limit is {max}")]
    SizeLimitExceeded { order: usize, max: usize },

    #[error("order {n} with {k} colors is over the exhaustive limit {limit}")]
    OverLimit { n: usize, k: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
