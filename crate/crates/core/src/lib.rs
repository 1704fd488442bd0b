//! Prime graphs (graphs without homogeneous sets), chain certificates, and
//! constructive extraction of the unavoidable induced subgraphs of large
//! prime graphs.
//!
//! ```
//! use primegraph::{graph::Graph, homogeneous::is_prime};
//!
//! assert!(is_prime(&Graph::path(4)));
//! assert!(!is_prime(&Graph::cycle(4)));
//! ```

pub mod bitset;
pub mod chains;
pub mod cli;
pub mod extraction;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod homogeneous;
pub mod iso;
pub mod verify;
pub mod witness;

pub use bitset::VertexSet;
pub use chains::Chain;
pub use families::{FamilyId, FamilyKind};
pub use graph::{EmbeddingMap, Graph};
pub use witness::{Provenance, Witness};
