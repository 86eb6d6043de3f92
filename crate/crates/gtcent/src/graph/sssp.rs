//! Single-source shortest paths with path counting and predecessor lists.

use super::{Graph, NodeId};
use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

/// Distance convention used by [`sssp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMode {
    /// Distances count the NODES on a shortest path: `dist(s, s) = 1`,
    /// adjacent nodes have distance 2.
    Unweighted,
    /// Distances sum edge weights: `dist(s, s) = 0`.
    Weighted,
}

/// Shortest-path data from one source.
///
/// Unreachable nodes carry `dist = f64::INFINITY` and `sigma = 0`.
#[derive(Debug, Clone)]
pub struct SsspResult {
    pub source: NodeId,
    pub dist: Vec<f64>,
    /// Number of shortest paths from the source to each node.
    pub sigma: Vec<f64>,
    /// Immediate predecessors on shortest paths from the source.
    pub preds: Vec<Vec<NodeId>>,
    /// Reachable nodes in non-decreasing distance (settling order).
    pub order: Vec<NodeId>,
}

pub fn sssp(g: &Graph, s: NodeId, mode: DistanceMode) -> SsspResult {
    match mode {
        DistanceMode::Unweighted => bfs(g, s),
        DistanceMode::Weighted => dijkstra(g, s),
    }
}

fn bfs(g: &Graph, s: NodeId) -> SsspResult {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut sigma = vec![0.0; n];
    let mut preds = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    dist[s] = 1.0;
    sigma[s] = 1.0;
    let mut queue = VecDeque::new();
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if dist[w].is_infinite() {
                dist[w] = dist[v] + 1.0;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1.0 {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }
    SsspResult {
        source: s,
        dist,
        sigma,
        preds,
        order,
    }
}

#[derive(PartialEq)]
pub(crate) struct HeapEntry(f64, NodeId);

pub(crate) fn heap_entry(dist: f64, v: NodeId) -> HeapEntry {
    HeapEntry(dist, v)
}

pub(crate) fn heap_pop(heap: &mut BinaryHeap<HeapEntry>) -> Option<(f64, NodeId)> {
    heap.pop().map(|HeapEntry(d, v)| (d, v))
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Min-heap on distance; ties broken by node id for determinism.
        other
            .0
            .partial_cmp(&self.0)
            .unwrap()
            .then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(g: &Graph, s: NodeId) -> SsspResult {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut sigma = vec![0.0; n];
    let mut preds = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut settled = vec![false; n];
    dist[s] = 0.0;
    sigma[s] = 1.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry(0.0, s));
    while let Some(HeapEntry(d, v)) = heap.pop() {
        if settled[v] || d > dist[v] {
            continue;
        }
        settled[v] = true;
        order.push(v);
        for (w, lambda) in g.weighted_neighbors(v) {
            let cand = dist[v] + lambda;
            if cand < dist[w] {
                dist[w] = cand;
                sigma[w] = sigma[v];
                preds[w].clear();
                preds[w].push(v);
                heap.push(HeapEntry(cand, w));
            } else if cand == dist[w] && !settled[w] {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }
    SsspResult {
        source: s,
        dist,
        sigma,
        preds,
        order,
    }
}
