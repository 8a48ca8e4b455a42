use thiserror::Error;

/// Errors produced by graph/model/configuration validation, parsing, and
/// the verification machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChipError {
    #[error("edge e{edge} is a loop at vertex {vertex}; loops are not allowed")]
    LoopEdge { edge: usize, vertex: usize },

    #[error("edge e{edge} references vertex {vertex}, but the graph has vertices 0..{vertex_count}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("graph is not connected (vertex {vertex} is unreachable from the sink)")]
    Disconnected { vertex: usize },

    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("graph needs at least one edge")]
    NoEdges,

    #[error("cover does not contain non-sink vertex {vertex}")]
    CoverViolation { vertex: usize },

    #[error("cover sets {inner:?} and {outer:?} are comparable; maximal sets must form an antichain")]
    AntichainViolation {
        inner: Vec<usize>,
        outer: Vec<usize>,
    },

    #[error("cover set contains the sink vertex 0")]
    SinkInCoverSet,

    #[error("cover set is empty")]
    EmptyCoverSet,

    #[error("cover set references vertex {vertex}, outside 1..{vertex_count}")]
    CoverVertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("configuration has {got} entries but the graph has {expected} non-sink vertices")]
    ConfigurationLength { expected: usize, got: usize },

    #[error("negative chip count {value} at vertex {vertex}")]
    NegativeChips { vertex: usize, value: i64 },

    #[error("edge set is not a spanning tree: {reason}")]
    NotSpanningTree { reason: String },

    #[error("edge id e{edge} out of range; the graph has edges e1..e{edge_count}")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("configuration is not recurrent")]
    NotRecurrent,

    #[error("no maximal ready set contains vertex {vertex}; its minimum loss is undefined")]
    MinLossUndefined { vertex: usize },

    #[error("stabilization identity offset is not strictly positive at vertex {vertex} (value {value})")]
    OffsetNotPositive { vertex: usize, value: i64 },

    #[error("iteration cap {cap} exceeded while searching for a recurrent representative")]
    IterationCapExceeded { cap: u64 },

    #[error("instance too large for exhaustive oracle: {0}")]
    InstanceTooLarge(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl ChipError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        ChipError::Parse {
            line,
            message: message.into(),
        }
    }
}
