//! Graph representation and the shortest-path / structure machinery every
//! solver in this crate is built on.
//!
//! Nodes carry arbitrary string labels externally and dense indices
//! `0..n` internally; indices are assigned by first appearance so that
//! parsing the same edge list always yields the same graph.

mod centrality;
mod paths;
pub mod random;
mod sssp;
mod structure;

pub use centrality::{
    classic_centrality, group_centrality, modularity, path_betweenness, CentralityKind,
};
pub use paths::{path_count_polynomials, PathCountPolynomial};
pub use sssp::{sssp, DistanceMode, SsspResult};
pub(crate) use structure::adjacency_masks;
pub use structure::{articulation_points, connected_induced_subgraphs, is_connected_subset};

use std::collections::HashMap;
use thiserror::Error;

/// Dense node index.
pub type NodeId = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: expected `u v` or `u v w`")]
    MalformedLine { line: usize },
    #[error("line {line}: self-loop on `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge `{u} {v}`")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: edge weight must be strictly positive, got {weight}")]
    NonPositiveWeight { line: usize, weight: f64 },
    #[error("line {line}: mixes weighted and unweighted edges")]
    MixedWeights { line: usize },
    #[error("empty node label on line {line}")]
    EmptyLabel { line: usize },
    #[error("unknown node label `{0}`")]
    UnknownLabel(String),
    #[error("operation requires a weighted graph")]
    WeightedGraphRequired,
    #[error("node set must not be empty")]
    EmptySet,
    #[error("duplicate node in sequence")]
    DuplicateNode,
    #[error("node set does not induce a connected subgraph")]
    DisconnectedSet,
    #[error("graph has no edges")]
    NoEdges,
    #[error("community file assigns node `{0}` more than once")]
    DuplicateAssignment(String),
    #[error("node `{0}` is missing a community assignment")]
    MissingAssignment(String),
    #[error("community indices must cover 0..m without gaps (missing {0})")]
    EmptyCommunity(usize),
    #[error("graphs larger than {limit} nodes are not supported by this operation (got {got})")]
    TooLarge { limit: usize, got: usize },
}

/// Undirected or directed graph with optional positive edge weights and
/// optional real node weights.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    adj: Vec<Vec<NodeId>>,
    weights: Vec<Vec<f64>>,
    // Predecessor lists; only populated for directed graphs.
    rev_adj: Vec<Vec<NodeId>>,
    rev_weights: Vec<Vec<f64>>,
    directed: bool,
    weighted: bool,
    node_weights: Option<Vec<f64>>,
    edge_count: usize,
}

impl Graph {
    pub fn builder(directed: bool) -> GraphBuilder {
        GraphBuilder::new(directed)
    }

    /// Parses the edge-list text format: one edge per line, `u v` or
    /// `u v w`, `#` comments, blank lines ignored.
    pub fn parse_edge_list(text: &str, directed: bool) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(directed);
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let fields: Vec<&str> = l.split_whitespace().collect();
            match fields.len() {
                0 => continue,
                2 => {
                    b.edge_line(fields[0], fields[1], None, line)?;
                }
                3 => {
                    let w: f64 = fields[2]
                        .parse()
                        .map_err(|_| GraphError::MalformedLine { line })?;
                    b.edge_line(fields[0], fields[1], Some(w), line)?;
                }
                _ => return Err(GraphError::MalformedLine { line }),
            }
        }
        b.build()
    }

    pub fn from_edges(edges: &[(&str, &str)], directed: bool) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(directed);
        for (i, (u, v)) in edges.iter().enumerate() {
            b.edge_line(u, v, None, i + 1)?;
        }
        b.build()
    }

    pub fn from_weighted_edges(
        edges: &[(&str, &str, f64)],
        directed: bool,
    ) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(directed);
        for (i, (u, v, w)) in edges.iter().enumerate() {
            b.edge_line(u, v, Some(*w), i + 1)?;
        }
        b.build()
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    pub fn require_node(&self, label: &str) -> Result<NodeId, GraphError> {
        self.node_id(label)
            .ok_or_else(|| GraphError::UnknownLabel(label.to_string()))
    }

    /// Out-neighbors for directed graphs, all neighbors otherwise.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v]
    }

    /// In-neighbors for directed graphs, all neighbors otherwise.
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        if self.directed {
            &self.rev_adj[v]
        } else {
            &self.adj[v]
        }
    }

    pub fn weighted_neighbors(&self, v: NodeId) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .zip(self.weights[v].iter().copied())
    }

    pub fn weighted_in_neighbors(&self, v: NodeId) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        let (a, w) = if self.directed {
            (&self.rev_adj[v], &self.rev_weights[v])
        } else {
            (&self.adj[v], &self.weights[v])
        };
        a.iter().copied().zip(w.iter().copied())
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_neighbors(v).len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adj[u].contains(&v)
    }

    /// Weight of edge `(u, v)`; 1 on unweighted graphs, `None` when absent.
    pub fn edge_weight(&self, u: NodeId, v: NodeId) -> Option<f64> {
        self.adj[u]
            .iter()
            .position(|&x| x == v)
            .map(|p| self.weights[u][p])
    }

    pub fn set_node_weights(&mut self, w: Vec<f64>) {
        assert_eq!(w.len(), self.node_count());
        self.node_weights = Some(w);
    }

    /// Node weight, defaulting to 1 when none have been set.
    pub fn node_weight(&self, v: NodeId) -> f64 {
        self.node_weights.as_ref().map_or(1.0, |w| w[v])
    }

    pub fn node_weights(&self) -> Option<&[f64]> {
        self.node_weights.as_deref()
    }

    /// Parses `node value` lines into a per-node vector (order of this
    /// graph's indices). Nodes absent from the file default to 1.
    pub fn parse_node_weights(&self, text: &str) -> Result<Vec<f64>, GraphError> {
        let mut out = vec![1.0; self.node_count()];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let fields: Vec<&str> = l.split_whitespace().collect();
            match fields.len() {
                0 => continue,
                2 => {
                    let v = self.require_node(fields[0])?;
                    out[v] = fields[1]
                        .parse()
                        .map_err(|_| GraphError::MalformedLine { line })?;
                }
                _ => return Err(GraphError::MalformedLine { line }),
            }
        }
        Ok(out)
    }

    /// All edges as `(u, v, weight)` with `u < v` for undirected graphs.
    pub fn edges(&self) -> Vec<(NodeId, NodeId, f64)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.node_count() {
            for (v, w) in self.weighted_neighbors(u) {
                if self.directed || u < v {
                    out.push((u, v, w));
                }
            }
        }
        out
    }
}

pub struct GraphBuilder {
    directed: bool,
    weighted: Option<bool>,
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    edges: Vec<(NodeId, NodeId, f64)>,
    seen: HashMap<(NodeId, NodeId), ()>,
}

impl GraphBuilder {
    fn new(directed: bool) -> Self {
        GraphBuilder {
            directed,
            weighted: None,
            labels: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            seen: HashMap::new(),
        }
    }

    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        id
    }

    /// Registers a node without edges (isolated nodes are allowed).
    pub fn node(&mut self, label: &str) -> &mut Self {
        self.intern(label);
        self
    }

    pub fn edge_line(
        &mut self,
        u: &str,
        v: &str,
        w: Option<f64>,
        line: usize,
    ) -> Result<&mut Self, GraphError> {
        if u.is_empty() || v.is_empty() {
            return Err(GraphError::EmptyLabel { line });
        }
        match (self.weighted, w.is_some()) {
            (Some(true), false) | (Some(false), true) => {
                return Err(GraphError::MixedWeights { line })
            }
            (None, has) => self.weighted = Some(has),
            _ => {}
        }
        if let Some(w) = w {
            if !(w > 0.0) {
                return Err(GraphError::NonPositiveWeight { line, weight: w });
            }
        }
        let ui = self.intern(u);
        let vi = self.intern(v);
        if ui == vi {
            return Err(GraphError::SelfLoop {
                line,
                label: u.to_string(),
            });
        }
        let key = if self.directed || ui < vi {
            (ui, vi)
        } else {
            (vi, ui)
        };
        if self.seen.insert(key, ()).is_some() {
            return Err(GraphError::DuplicateEdge {
                line,
                u: u.to_string(),
                v: v.to_string(),
            });
        }
        self.edges.push((ui, vi, w.unwrap_or(1.0)));
        Ok(self)
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        let n = self.labels.len();
        let mut adj = vec![Vec::new(); n];
        let mut weights = vec![Vec::new(); n];
        let mut rev_adj = vec![Vec::new(); n];
        let mut rev_weights = vec![Vec::new(); n];
        for &(u, v, w) in &self.edges {
            adj[u].push(v);
            weights[u].push(w);
            if self.directed {
                rev_adj[v].push(u);
                rev_weights[v].push(w);
            } else {
                adj[v].push(u);
                weights[v].push(w);
            }
        }
        Ok(Graph {
            labels: self.labels,
            index: self.index,
            adj,
            weights,
            rev_adj,
            rev_weights,
            directed: self.directed,
            weighted: self.weighted.unwrap_or(false),
            node_weights: None,
            edge_count: self.edges.len(),
        })
    }
}

/// Partition of the node set into communities `0..m`.
#[derive(Debug, Clone)]
pub struct CommunityStructure {
    assignment: Vec<usize>,
    members: Vec<Vec<NodeId>>,
}

impl CommunityStructure {
    /// Builds a community structure from a per-node community index.
    /// Indices must cover `0..m` with no empty community.
    pub fn new(assignment: Vec<usize>) -> Result<Self, GraphError> {
        let m = assignment.iter().copied().max().map_or(0, |x| x + 1);
        let mut members = vec![Vec::new(); m];
        for (v, &c) in assignment.iter().enumerate() {
            members[c].push(v);
        }
        if let Some(c) = members.iter().position(|m| m.is_empty()) {
            return Err(GraphError::EmptyCommunity(c));
        }
        Ok(CommunityStructure {
            assignment,
            members,
        })
    }

    /// One community holding every node.
    pub fn whole(n: usize) -> Self {
        CommunityStructure::new(vec![0; n]).expect("non-empty")
    }

    /// Every node in its own community.
    pub fn singletons(n: usize) -> Self {
        CommunityStructure::new((0..n).collect()).expect("non-empty")
    }

    /// Parses `node community_id` lines; every graph node must appear once.
    pub fn parse(g: &Graph, text: &str) -> Result<Self, GraphError> {
        let mut assignment = vec![usize::MAX; g.node_count()];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let fields: Vec<&str> = l.split_whitespace().collect();
            match fields.len() {
                0 => continue,
                2 => {
                    let v = g.require_node(fields[0])?;
                    if assignment[v] != usize::MAX {
                        return Err(GraphError::DuplicateAssignment(fields[0].to_string()));
                    }
                    assignment[v] = fields[1]
                        .parse()
                        .map_err(|_| GraphError::MalformedLine { line })?;
                }
                _ => return Err(GraphError::MalformedLine { line }),
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(GraphError::MissingAssignment(g.label(v).to_string()));
        }
        // Renumber to a dense 0..m range preserving first appearance.
        let mut remap: HashMap<usize, usize> = HashMap::new();
        let mut dense = Vec::with_capacity(assignment.len());
        for &c in &assignment {
            let next = remap.len();
            dense.push(*remap.entry(c).or_insert(next));
        }
        CommunityStructure::new(dense)
    }

    pub fn community_count(&self) -> usize {
        self.members.len()
    }

    pub fn community_of(&self, v: NodeId) -> usize {
        self.assignment[v]
    }

    pub fn members(&self, c: usize) -> &[NodeId] {
        &self.members[c]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}
