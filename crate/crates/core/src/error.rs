use thiserror::Error;

use crate::Vertex;

/// Errors raised while building graphs or manipulating orderings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop on vertex {} is not allowed in a simple graph", .0 + 1)]
    SelfLoop(Vertex),
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: i64, n: usize },
    #[error("sequence is not a permutation of all {n} vertices")]
    NotAPermutation { n: usize },
    #[error("vertices {} and {} are not adjacent on the circle", .0 + 1, .1 + 1)]
    NotCircleAdjacent(Vertex, Vertex),
    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),
    #[error("transformation is not eligible on this ordering: {0}")]
    Ineligible(String),
    #[error("invalid instance parameters: {0}")]
    InvalidParameters(String),
    #[error("cycle is not a Hamiltonian cycle of the graph")]
    NotHamiltonian,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
