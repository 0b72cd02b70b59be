//! Strong rainbow disconnection (srd) and rainbow disconnection (rd) of
//! graphs.
//!
//! An edge-colored connected graph is *rainbow disconnected* when every pair
//! of vertices is separated by some edge cut whose edges carry distinct
//! colors, and *strong rainbow disconnected* when that rainbow cut can be
//! chosen of minimum size. The crate builds such colorings for the families
//! where the optimal number of colors is known, verifies arbitrary colorings,
//! computes `srd(G)` and `rd(G)` exactly on small graphs, and turns 3-CNF
//! formulas into rainbow-minimum-cut instances.
//!
//! Modules:
//! - [`graph`]: multigraphs, parsing, blocks, contraction, Class 1 test
//! - [`connectivity`]: `λ(u,v)`, minimum cuts and their enumeration
//! - [`coloring`]: proper edge colorings and srd constructions
//! - [`verify`]: rainbow cut search and coloring verification
//! - [`solve`]: exact `srd`/`rd` numbers and the equality scan
//! - [`reduction`]: the 3-SAT to rainbow-minimum-cut construction
//! - [`cli`]: the `srd-kit` command line

pub mod cli;
pub mod coloring;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod reduction;
pub mod solve;
pub mod verify;

pub use coloring::EdgeColoring;
pub use connectivity::CutCertificate;
pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSet, Graph, Vertex, VertexSet};
