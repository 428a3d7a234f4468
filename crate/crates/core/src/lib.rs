//! Exact hopping zero forcing on small graphs: forcing numbers, propagation
//! times, sum and product throttling, bound checks with witnesses, and the
//! extremal atlases and forbidden families for extreme throttling values.

pub mod bounds;
pub mod extended;
pub mod extremal;
pub mod forcing;
pub mod graph;
pub mod solvers;
pub mod verify;
pub mod vertex_set;

pub use extended::Extended;
pub use forcing::{Force, ForceSet, ForcingState, RoundSchedule, Rule};
pub use graph::{Graph, GraphError};
pub use vertex_set::{Vertex, VertexSet};
