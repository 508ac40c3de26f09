//! (2k,k)-connectivity of multigraphs.
//!
//! A multigraph is *(2k,k)-connected* when it has at least three vertices,
//! is 2k-edge-connected, and stays k-edge-connected after deleting any one
//! vertex. This crate provides:
//!
//! * [`multigraph`]: multigraph storage with stable edge ids and a text format;
//! * [`biset`]: bi-set algebra (wall, meet, join, complement);
//! * [`connectivity`]: the bi-set functional and two independent checkers;
//! * [`splitting`]: admissible splitting-off at a vertex, blocking bi-sets
//!   and t-star obstacles;
//! * [`construction`]: building (2k,k)-connected graphs for even `k` from
//!   `kK3` by adding edges and pinching, and the inverse decomposition;
//! * [`augmentation`]: minimum edge additions reaching (2k,k)-connectivity,
//!   with a min-max certificate.
//!
//! All procedures are deterministic: vertices and edges are visited in
//! ascending id order and randomness only enters through explicit seeds.

pub mod augmentation;
pub mod biset;
pub mod connectivity;
pub mod construction;
pub mod error;
mod flow;
pub mod multigraph;
pub mod splitting;
pub mod vset;

pub use biset::BiSet;
pub use connectivity::{ConnParams, ConnectivityVerdict, GroundMode};
pub use error::{Error, Result};
pub use multigraph::{Edge, EdgeId, MultiGraph, VertexId};
pub use vset::VertexSet;
