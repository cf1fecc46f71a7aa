//! Rotation-system plane triangulations and the operations every other module
//! builds on: parsing, face tracing, duality, mirroring and canonical codes.

pub(crate) mod canon;
mod dot;
pub(crate) mod dual;
mod error;
pub(crate) mod faces;
mod io;
pub(crate) mod triangulation;

pub use canon::{canonical_code, canonical_labeling, op_equivalent, op_isomorphism, CanonicalCode};
pub use dot::to_dot;
pub use dual::{dual_graph, CubicPlaneGraph};
pub use error::GraphError;
pub use faces::{trace_faces, FaceSet};
pub use io::{parse_triangulation, write_triangulation};
pub use triangulation::{mirror_reflect, PlaneTriangulation, VertexId};
