//! Directed graph edge stores built from flat integer arrays.
//!
//! Three structures share one [`EdgeStore`] contract:
//!
//! * [`MultiList`]: per-vertex singly linked adjacency lists threaded through
//!   shared `heads` / `next` / `data` arrays.
//! * [`EdgeHash`]: an open-addressing, linear-probing table of packed edges.
//! * [`HashList`]: the two merged. Every occupied hash slot is also a list
//!   node on its source vertex's chain, so edge lookup is a hash probe and
//!   neighbor enumeration walks exactly `deg(x)` slots.
//!
//! [`OracleGraph`] is a dense adjacency matrix used as ground truth, and the
//! [`bench`] module drives seeded workloads against any mix of stores while
//! counting probes and list-node visits.

pub mod bench;
mod config;
mod edge;
mod edge_hash;
mod error;
mod hash;
mod hashlist;
mod multilist;
mod oracle;
mod slots;
mod store;

pub use config::{StoreConfig, MIN_CAPACITY};
pub use edge::{pack_edge, unpack_edge, EdgeCode, VertexId};
pub use edge_hash::EdgeHash;
pub use error::GraphError;
pub use hash::{mixer_hash, paper_hash, HashMode};
pub use hashlist::{HashList, Weight};
pub use multilist::MultiList;
pub use oracle::{OracleGraph, ORACLE_MAX_VERTICES};
pub use store::{Adjacency, EdgeStore, Neighbors, Traced};

/// Sentinel slot index meaning "no node": empty chain head or end of chain.
pub const NONE: u32 = u32::MAX;
