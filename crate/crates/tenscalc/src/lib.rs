//! Combinatorial kernel for progressive planar graphs and their algebra:
//! half-edge graphs, planar structures, diagrams valued in tensor schemes or
//! strict tensor categories, diagram evaluation, and the coarse-graining
//! monad with its algebras.

pub mod diagram;
pub mod engine;
pub mod error;
pub mod fissus;
pub mod fixtures;
pub mod graph;
pub mod json;
pub mod oriented;
pub mod manifold;
pub mod matrix;
pub mod partition;
pub mod category;
pub mod decompose;
pub mod planar;
pub mod render;
pub mod sample;
pub mod scheme;
pub mod suites;

pub use error::{EvalError, GraphError, LawViolation, PlanarError, SchemeError};
pub use graph::{classify, Graph, Hid, PreGraph};
pub use oriented::{is_admissible, AnchoredGraph, OrientedGraph, Reach, Sign};
pub use fissus::FissusPlanarGraph;
pub use partition::LinearPartition;
pub use planar::PlanarGraph;

/// Temporary CLI entry point until the command surface lands.
pub fn run_placeholder() -> i32 {
    0
}
