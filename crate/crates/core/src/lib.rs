//! Neighbor-locating colorings of graphs: verification, order bounds,
//! explicit extremal constructions, and an exact search oracle.

pub mod bounds;
pub mod construct;
pub mod graph;
pub mod io;
pub mod solver;
pub mod verify;

pub use graph::{FamilySpec, Graph, Vertex};
pub use verify::{Color, Coloring};
