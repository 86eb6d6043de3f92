//! Articulation points of induced subgraphs and connected-induced-subgraph
//! enumeration.

use super::{Graph, GraphError, NodeId};

/// Whether the subgraph induced by `set` is connected. Empty sets are not
/// connected; singletons are.
pub fn is_connected_subset(g: &Graph, set: &[NodeId]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut member = vec![false; g.node_count()];
    for &v in set {
        member[v] = true;
    }
    let mut seen = vec![false; g.node_count()];
    let mut stack = vec![set[0]];
    seen[set[0]] = true;
    let mut reached = 1usize;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if member[u] && !seen[u] {
                seen[u] = true;
                reached += 1;
                stack.push(u);
            }
        }
        if g.is_directed() {
            for &u in g.in_neighbors(v) {
                if member[u] && !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
    }
    reached == set.len()
}

/// Nodes of `set` whose removal disconnects the induced subgraph.
///
/// The induced subgraph must be connected; sets of at most two nodes have
/// none. Directed edges are treated as undirected for connectivity.
pub fn articulation_points(g: &Graph, set: &[NodeId]) -> Result<Vec<NodeId>, GraphError> {
    if set.is_empty() {
        return Err(GraphError::EmptySet);
    }
    if !is_connected_subset(g, set) {
        return Err(GraphError::DisconnectedSet);
    }
    if set.len() <= 2 {
        return Ok(Vec::new());
    }
    let n = g.node_count();
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    // Iterative Hopcroft-Tarjan low-link search over the induced subgraph.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let root = set[0];
    let mut root_children = 0usize;

    let nbrs = |v: NodeId| -> Vec<NodeId> {
        let mut out: Vec<NodeId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| member[u])
            .collect();
        if g.is_directed() {
            for &u in g.in_neighbors(v) {
                if member[u] && !out.contains(&u) {
                    out.push(u);
                }
            }
        }
        out
    };

    let mut stack: Vec<(NodeId, usize, Vec<NodeId>)> = Vec::new();
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    stack.push((root, 0, nbrs(root)));
    while let Some(&mut (v, ref mut idx, ref kids)) = stack.last_mut() {
        if *idx < kids.len() {
            let u = kids[*idx];
            *idx += 1;
            if disc[u] == usize::MAX {
                parent[u] = v;
                if v == root {
                    root_children += 1;
                }
                disc[u] = timer;
                low[u] = timer;
                timer += 1;
                let next = nbrs(u);
                stack.push((u, 0, next));
            } else if u != parent[v] {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if let Some(&mut (p, _, _)) = stack.last_mut() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[root] = true;
    }
    Ok(set.iter().copied().filter(|&v| is_cut[v]).collect())
}

/// Visits every connected induced subgraph (as a sorted node-id slice)
/// exactly once, singletons included, and returns the total count.
///
/// Subgraphs are expanded root by root so that each set is emitted from
/// its minimum-index node only. Limited to 64 nodes.
pub fn connected_induced_subgraphs<F: FnMut(&[NodeId])>(
    g: &Graph,
    mut visit: F,
) -> Result<usize, GraphError> {
    let n = g.node_count();
    if n > 64 {
        return Err(GraphError::TooLarge { limit: 64, got: n });
    }
    let adj = adjacency_masks(g);
    let mut count = 0usize;
    let mut members = Vec::with_capacity(n);
    for root in (0..n).rev() {
        let c = 1u64 << root;
        emit(c, &mut count, &mut members, &mut visit);
        let forbidden = (1u64 << (root + 1)).wrapping_sub(1) | c;
        expand(&adj, c, forbidden, &mut count, &mut members, &mut visit);
    }
    Ok(count)
}

/// Neighbor bitmasks treating directed edges as undirected.
pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut adj = vec![0u64; n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            adj[v] |= 1 << u;
            adj[u] |= 1 << v;
        }
    }
    adj
}

fn neighborhood(adj: &[u64], c: u64) -> u64 {
    let mut nb = 0u64;
    let mut rest = c;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        nb |= adj[v];
    }
    nb & !c
}

fn emit<F: FnMut(&[NodeId])>(c: u64, count: &mut usize, members: &mut Vec<NodeId>, visit: &mut F) {
    members.clear();
    let mut rest = c;
    while rest != 0 {
        members.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    *count += 1;
    visit(members);
}

fn expand<F: FnMut(&[NodeId])>(
    adj: &[u64],
    c: u64,
    forbidden: u64,
    count: &mut usize,
    members: &mut Vec<NodeId>,
    visit: &mut F,
) {
    let ext = neighborhood(adj, c) & !forbidden;
    if ext == 0 {
        return;
    }
    // Iterate every nonempty subset of the extension set.
    let mut s = ext;
    loop {
        let next = c | s;
        emit(next, count, members, visit);
        expand(adj, next, forbidden | ext, count, members, visit);
        s = (s - 1) & ext;
        if s == 0 {
            break;
        }
    }
}
