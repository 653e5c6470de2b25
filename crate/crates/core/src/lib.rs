//! Exact computation of k-defective Ramsey numbers on forests, cacti,
//! bipartite graphs, split graphs and cographs.

pub mod canon;
pub mod classes;
pub mod constructions;
pub mod enumerate;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod hunt;
pub mod sets;

pub use classes::{member, GraphClass};
pub use graph::{Edge, Graph, GraphError, VertexSet};
pub use sets::{alpha_k, is_k_dense, is_k_sparse, ramsey_check, WitnessReport};
pub use formulas::{defective_ramsey, Provenance, RamseyQuery, RamseyValue, Status};
pub use constructions::witness_for;
