//! Connectedness certificates for the search space of clash-free timetables
//! under Kempe exchanges.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: undirected graphs, colorings, orderings, degeneracy and Kempe
//!   components.
//! - [`instance`]: readers for curriculum-based (`.ctt`) and post-enrollment
//!   (`.tim`) timetabling instances, producing a uniform [`UtpInstance`].
//! - [`reduction`]: the list-coloring to vertex-coloring gadget (`H_G`), the
//!   fixed vertex set and projection of colorings back onto the events.
//! - [`reconfig`]: Kempe reconfiguration between two colorings, plan replay and
//!   verification.
//! - [`subdeg`]: vertex elimination with a fixed set, the ordering condition and
//!   the subdegeneracy upper bound.
//! - [`oracle`]: exhaustive ground truth for tiny graphs.
//! - [`certify`]: the per-instance certification pipeline and report tables.

pub mod certify;
pub mod error;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod reconfig;
pub mod reduction;
pub mod subdeg;

pub use error::{Error, ParseError, Result};
pub use graph::{Color, Coloring, Graph, KempeExchange, Vertex, VertexOrdering, VertexSet};
pub use instance::UtpInstance;
