use thiserror::Error;

/// Errors produced while reading instances, building models, or checking solutions.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: missing `p edge` header before edge lines")]
    MissingHeader { line: usize },
    #[error("no `p edge <n> <m>` line found")]
    NoProblemLine,
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: vertex {vertex} outside [1, {n}]")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("graph needs at least {required} vertices, has {n}")]
    TooFewVertices { n: usize, required: usize },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("tangent index bound {i_max} outside [0, {max}]")]
    TangentRange { i_max: usize, max: usize },
    #[error("coloring has {got} entries, graph has {n} vertices")]
    ColoringLength { got: usize, n: usize },
    #[error("coloring is not proper: edge {{{u}, {v}}} is monochromatic")]
    ImproperColoring { u: usize, v: usize },
    #[error("assignment has {got} values, model has {expected} pair variables")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("assignment is infeasible: {0}")]
    Infeasible(String),
    #[error("invalid bounds: lower {lb}, upper {ub}")]
    InvalidBounds { lb: u64, ub: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
