//! Brute-force ground truth: exhaustive hamiltonian-set search and an
//! enumeration of the family that does not use the generating operations.

mod census;
mod search;

use thiserror::Error;

pub use census::{exhaustive_family_census, CENSUS_CAP};
pub use search::{
    complete_hamiltonian_set, enumerate_hamiltonian_sets, naive_hamiltonian_sets, SearchConstraint, SearchResult,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices; the search handles at most {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("census bound {bound} exceeds the cap {cap}")]
    CapExceeded { bound: usize, cap: usize },
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(crate::planar::VertexId),
}
