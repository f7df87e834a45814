//! Exact domination-criticality and matching-structure certification for
//! small graphs (at most 64 vertices, one machine word per vertex set).

pub mod canon;
pub mod domination;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod matching;
pub mod named;
pub mod structure;
pub mod vertex_set;

pub use graph::{components_after_deletion, ComponentSummary, Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6};
pub use vertex_set::VertexSet;
