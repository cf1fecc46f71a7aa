use thiserror::Error;

use super::VertexId;

/// Diagnostics raised while reading or validating a triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("vertex {0} is listed twice")]
    DuplicateVertex(VertexId),
    #[error("vertex {0} is not part of the graph")]
    UnknownVertex(VertexId),
    #[error("vertex {0} lists itself as a neighbor")]
    Loop(VertexId),
    #[error("vertex {v} lists neighbor {u} more than once")]
    RepeatedNeighbor { v: VertexId, u: VertexId },
    #[error("adjacency is not symmetric: {v} lists {u} but {u} does not list {v}")]
    AsymmetricAdjacency { v: VertexId, u: VertexId },
    #[error("face trace does not close as triangle starting at edge ({u},{v})")]
    NonTriangularFace { u: VertexId, v: VertexId },
    #[error("a triangulation needs at least 4 vertices, found {0}")]
    TooSmall(usize),
    #[error("euler check failed: {vertices} vertices, {edges} edges, {faces} faces")]
    Euler { vertices: usize, edges: usize, faces: usize },
    #[error("declared outer face ({0}, {1}, {2}) is not a traced face")]
    OuterNotFace(VertexId, VertexId, VertexId),
    #[error("g={0} does not lie on the outer face")]
    GNotOnOuter(VertexId),
    #[error("not 3-connected: removing {a} and {b} disconnects the graph")]
    NotThreeConnected { a: VertexId, b: VertexId },
    #[error("triangles do not form a closed orientable surface: {0}")]
    BadTriangles(String),
}
