//! Game-theoretic centrality measures for networks.
//!
//! Nodes are treated as players of a cooperative game whose coalition
//! values come from the graph (spheres of influence, group betweenness,
//! connectivity, ...); a solution concept — the Shapley value, a
//! Semivalue, the Owen value, or an ordered-coalition value — then turns
//! group worth into a per-node ranking. Every fast solver here is paired
//! with an exhaustive oracle so results can be cross-checked on small
//! inputs.
//!
//! Start with the runnable programs under `examples/`; each one walks
//! through a single capability. A thin `gtcent` binary exposes the same
//! functionality on the command line.
//!
//! ```
//! use gtcent::graph::Graph;
//! use gtcent::degree::sv_g1;
//!
//! let g = Graph::parse_edge_list("a b\nb c\n", false).unwrap();
//! let scores = sv_g1(&g);
//! assert!((scores[1] - 4.0 / 3.0).abs() < 1e-12);
//! ```

#![forbid(unsafe_code)]

pub mod betweenness;
pub mod cli;
pub mod community;
pub mod connectivity;
pub mod degree;
pub mod fixtures;
pub mod games;
pub mod graph;
pub mod mcnets;
pub mod report;
pub mod vulnerability;

pub use graph::{CommunityStructure, Graph, GraphError, NodeId};
