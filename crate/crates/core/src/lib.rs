//! Snakes-and-ladders heuristic for the Hamiltonian cycle problem.
//!
//! Vertices of a graph are placed on a circle. Edges between circle neighbors
//! are snakes, other edges are ladders, and circle neighbors without an edge
//! form gaps. The solver rearranges the circle with short compositions of two
//! segment-reversal generators until no gap is left, using tabu lists over
//! seen gaps and seen orderings to stay polynomially bounded.
//!
//! ```
//! use slh::{instances, solver::{solve, SolverConfig, Verdict}};
//!
//! let g = instances::generalized_petersen(9, 2).unwrap();
//! let result = solve(&g, &SolverConfig::default(), None).unwrap();
//! assert!(matches!(result.verdict, Verdict::HamiltonianCycle { .. }));
//! ```

pub mod error;
pub mod graph;
pub mod instances;
pub mod io;
pub mod metrics;
pub mod moves;
pub mod oracle;
pub mod ordering;
pub mod render;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{presolve, verify_hamiltonian_cycle, Cycle, Graph, NonHamiltonianReason, Presolve};
pub use moves::{MoveKind, TransformSpec};
pub use ordering::{CanonicalKey, CircleOrdering, Fingerprint, Gap, Generator};
pub use solver::{solve, SolveResult, SolverConfig, Verdict};

/// Internal 0-based vertex index.
pub type Vertex = usize;
