//! Bonds meeting long paths.
//!
//! A *bond* of a connected graph is a minimal nonempty edge-cut; equivalently,
//! the set of edges crossing a vertex bipartition whose two sides each induce
//! connected subgraphs. This crate constructs and independently verifies bond
//! certificates — bonds (or the degenerate cut-edge / cut-vertex forms) meeting
//! every sufficiently long path — in connected, 3-connected and k-connected
//! graphs, together with the exact solvers the certificates lean on: longest
//! path and cycle, vertex connectivity and disjoint path families, bond
//! enumeration, and the longest-path transversal number `lpt(G)`.
//!
//! Everything is exact and deterministic. Graphs are immutable bitset-adjacency
//! values with at most [`graph::MAX_VERTICES`] vertices, sized for exhaustive
//! desk-scale verification rather than asymptotics.

pub mod bond;
pub mod campaign;
pub mod catalog;
pub mod certify;
pub mod connectivity;
mod error;
pub mod gen;
pub mod graph;
pub mod lemmas;
pub mod path;

pub use bond::Bond;
pub use certify::{Certificate, CertificateKind, TheoremId, TheoremReport};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use path::Path;
