//! Configuration matching, pattern replacement and the generating operations.

mod enumerate;
mod matching;
mod ops;
mod pattern;
mod trace;

use thiserror::Error;

use crate::planar::{GraphError, VertexId};

pub use enumerate::{children, closure, enumerate, enumerate_family, family_starts, EnumeratedClass};
pub use matching::{match_at_dart, match_configuration, replace_patterns, ConfigurationMatch};
pub use ops::{apply_a, apply_edge_operation, edge_op_patterns, EdgeOp};
pub use pattern::{Pattern, Region};
pub use trace::{DerivationTrace, Step};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("pattern {name}: {msg}")]
    BadPattern { name: String, msg: String },
    #[error("site {site} out of range for an outer cycle of length {len}")]
    SiteOutOfRange { site: usize, len: usize },
    #[error("{op} at site {site}: {msg}")]
    Precondition { op: String, site: usize, msg: String },
    #[error("pattern {replacement} is not sigma-compatible with {configuration}")]
    Incompatible { replacement: String, configuration: String },
    #[error("proper regions overlap at face {0:?}")]
    Overlap([VertexId; 3]),
    #[error("replacement produced an invalid triangulation: {0}")]
    Graph(#[from] GraphError),
    #[error("result leaves the family: {0}")]
    NotInFamily(String),
    #[error("trace line {line}: {msg}")]
    TraceSyntax { line: usize, msg: String },
    #[error("replay step {step}: {msg}")]
    Replay { step: usize, msg: String },
}
