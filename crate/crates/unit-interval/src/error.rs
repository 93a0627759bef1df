use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("arc model has duplicate endpoints")]
    DuplicateEndpoints,
    #[error("arc model is not canonical")]
    NotCanonical,
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("graph is chordal, no hole exists")]
    ChordalInput,
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("arcs do not cover the circle")]
    NotACover,
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("generator exhausted {0} attempts")]
    GeneratorExhausted(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
