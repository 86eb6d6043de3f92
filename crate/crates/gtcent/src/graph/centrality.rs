//! Classic node centralities, their group extensions, path betweenness
//! and modularity.

use super::{sssp, CommunityStructure, DistanceMode, Graph, GraphError, NodeId, SsspResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralityKind {
    Degree,
    /// Sum of distances to every other node, counted in edges
    /// (weighted distance on weighted graphs). Unreachable nodes
    /// contribute nothing.
    Closeness,
    /// Fraction of shortest paths over unordered source-target pairs
    /// passing through the node, with 0/0 = 0.
    Betweenness,
}

fn distance_mode(g: &Graph) -> DistanceMode {
    if g.is_weighted() {
        DistanceMode::Weighted
    } else {
        DistanceMode::Unweighted
    }
}

/// Edge-count (or weighted) distance from a node-count SSSP result.
fn edge_distance(g: &Graph, d: f64) -> f64 {
    if g.is_weighted() || d.is_infinite() {
        d
    } else {
        d - 1.0
    }
}

pub fn classic_centrality(g: &Graph, kind: CentralityKind) -> Vec<f64> {
    let n = g.node_count();
    match kind {
        CentralityKind::Degree => (0..n).map(|v| g.degree(v) as f64).collect(),
        CentralityKind::Closeness => {
            let mode = distance_mode(g);
            let mut out = vec![0.0; n];
            for s in 0..n {
                let r = sssp(g, s, mode);
                for v in 0..n {
                    if v != s && r.dist[v].is_finite() {
                        out[v] += edge_distance(g, r.dist[v]);
                    }
                }
            }
            out
        }
        CentralityKind::Betweenness => betweenness(g),
    }
}

/// Brandes' accumulation; unordered pairs on undirected graphs.
fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mode = distance_mode(g);
    let mut out = vec![0.0; n];
    let mut delta = vec![0.0; n];
    for s in 0..n {
        let r = sssp(g, s, mode);
        delta.fill(0.0);
        for &w in r.order.iter().rev() {
            for &v in &r.preds[w] {
                delta[v] += r.sigma[v] / r.sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                out[w] += delta[w];
            }
        }
    }
    if !g.is_directed() {
        for x in &mut out {
            *x /= 2.0;
        }
    }
    out
}

/// Group centrality of a node set (Everett-Borgatti).
pub fn group_centrality(
    g: &Graph,
    kind: CentralityKind,
    set: &[NodeId],
) -> Result<f64, GraphError> {
    if set.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let mut member = vec![false; g.node_count()];
    for &v in set {
        member[v] = true;
    }
    Ok(match kind {
        CentralityKind::Degree => group_degree(g, &member),
        CentralityKind::Closeness => group_closeness(g, set, &member),
        CentralityKind::Betweenness => group_betweenness(g, &member),
    })
}

fn group_degree(g: &Graph, member: &[bool]) -> f64 {
    let mut seen = vec![false; g.node_count()];
    let mut count = 0usize;
    for v in 0..g.node_count() {
        if !member[v] {
            continue;
        }
        for &u in g.neighbors(v) {
            if !member[u] && !seen[u] {
                seen[u] = true;
                count += 1;
            }
        }
    }
    count as f64
}

fn group_closeness(g: &Graph, set: &[NodeId], member: &[bool]) -> f64 {
    // Multi-source shortest paths between the set and everyone else.
    // Directed graphs expand along reversed edges so the result sums the
    // distances other nodes need to reach the group, keeping singleton
    // groups consistent with classic closeness.
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    if g.is_weighted() {
        let mut heap = std::collections::BinaryHeap::new();
        for &s in set {
            dist[s] = 0.0;
            heap.push(super::sssp::heap_entry(0.0, s));
        }
        while let Some((d, v)) = super::sssp::heap_pop(&mut heap) {
            if d > dist[v] {
                continue;
            }
            for (w, lambda) in g.weighted_in_neighbors(v) {
                let cand = d + lambda;
                if cand < dist[w] {
                    dist[w] = cand;
                    heap.push(super::sssp::heap_entry(cand, w));
                }
            }
        }
    } else {
        let mut queue = std::collections::VecDeque::new();
        for &s in set {
            dist[s] = 0.0;
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for &w in g.in_neighbors(v) {
                if dist[w].is_infinite() {
                    dist[w] = dist[v] + 1.0;
                    queue.push_back(w);
                }
            }
        }
    }
    (0..n)
        .filter(|&v| !member[v] && dist[v].is_finite())
        .map(|v| dist[v])
        .sum()
}

/// Shortest paths hitting at least one member, summed over unordered
/// outside pairs: sigma_st(C) = sigma_st minus the original-length paths
/// that survive with the set removed.
fn group_betweenness(g: &Graph, member: &[bool]) -> f64 {
    let n = g.node_count();
    let mode = distance_mode(g);
    let mut total = 0.0;
    for s in 0..n {
        if member[s] {
            continue;
        }
        let full = sssp(g, s, mode);
        let sub = restricted_sssp(g, s, member, mode);
        // Unordered pairs on undirected graphs, ordered on directed ones
        // (matching the classic measure's pair convention).
        let targets: Box<dyn Iterator<Item = usize>> = if g.is_directed() {
            Box::new((0..n).filter(move |&t| t != s))
        } else {
            Box::new((s + 1)..n)
        };
        for t in targets {
            if member[t] || full.sigma[t] == 0.0 {
                continue;
            }
            let surviving = if sub.dist[t] == full.dist[t] {
                sub.sigma[t]
            } else {
                0.0
            };
            total += (full.sigma[t] - surviving) / full.sigma[t];
        }
    }
    total
}

/// SSSP in the subgraph with `blocked` nodes removed (source must be free).
pub(crate) fn restricted_sssp(
    g: &Graph,
    s: NodeId,
    blocked: &[bool],
    mode: DistanceMode,
) -> SsspResult {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut sigma = vec![0.0; n];
    let mut preds = vec![Vec::new(); n];
    let mut order = Vec::new();
    match mode {
        DistanceMode::Unweighted => {
            dist[s] = 1.0;
            sigma[s] = 1.0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in g.neighbors(v) {
                    if blocked[w] {
                        continue;
                    }
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
        }
        DistanceMode::Weighted => {
            dist[s] = 0.0;
            sigma[s] = 1.0;
            let mut settled = vec![false; n];
            let mut heap = std::collections::BinaryHeap::new();
            heap.push(super::sssp::heap_entry(0.0, s));
            while let Some((d, v)) = super::sssp::heap_pop(&mut heap) {
                if settled[v] || d > dist[v] {
                    continue;
                }
                settled[v] = true;
                order.push(v);
                for (w, lambda) in g.weighted_neighbors(v) {
                    if blocked[w] {
                        continue;
                    }
                    let cand = dist[v] + lambda;
                    if cand < dist[w] {
                        dist[w] = cand;
                        sigma[w] = sigma[v];
                        preds[w].clear();
                        preds[w].push(v);
                        heap.push(super::sssp::heap_entry(cand, w));
                    } else if cand == dist[w] && !settled[w] {
                        sigma[w] += sigma[v];
                        preds[w].push(v);
                    }
                }
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

/// Fraction of geodesics traversing the node sequence in order, summed
/// over unordered outside pairs. On undirected graphs either traversal
/// direction counts.
pub fn path_betweenness(g: &Graph, seq: &[NodeId]) -> Result<f64, GraphError> {
    if seq.is_empty() {
        return Err(GraphError::EmptySet);
    }
    {
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != seq.len() {
            return Err(GraphError::DuplicateNode);
        }
    }
    let n = g.node_count();
    let mode = distance_mode(g);
    let all: Vec<SsspResult> = (0..n).map(|s| sssp(g, s, mode)).collect();
    let d = |s: NodeId, t: NodeId| -> f64 {
        if s == t {
            0.0
        } else {
            edge_distance(g, all[s].dist[t])
        }
    };
    let sig = |s: NodeId, t: NodeId| -> f64 {
        if s == t {
            1.0
        } else {
            all[s].sigma[t]
        }
    };
    let in_seq = {
        let mut m = vec![false; n];
        for &v in seq {
            m[v] = true;
        }
        m
    };
    // Count of shortest s->t paths visiting the sequence in order: the
    // product of segment path counts when the stitched length is geodesic.
    let count_through = |s: NodeId, t: NodeId, seq: &[NodeId]| -> f64 {
        let mut len = d(s, seq[0]);
        let mut cnt = sig(s, seq[0]);
        for w in seq.windows(2) {
            len += d(w[0], w[1]);
            cnt *= sig(w[0], w[1]);
        }
        len += d(*seq.last().unwrap(), t);
        cnt *= sig(*seq.last().unwrap(), t);
        if len == d(s, t) {
            cnt
        } else {
            0.0
        }
    };
    let reversed: Vec<NodeId> = seq.iter().rev().copied().collect();
    let mut total = 0.0;
    for s in 0..n {
        // Unordered pairs (either traversal direction counts) on
        // undirected graphs; ordered pairs on directed ones.
        let targets: Box<dyn Iterator<Item = usize>> = if g.is_directed() {
            Box::new((0..n).filter(move |&t| t != s))
        } else {
            Box::new((s + 1)..n)
        };
        for t in targets {
            if in_seq[s] || in_seq[t] {
                continue;
            }
            let sigma_st = sig(s, t);
            if sigma_st == 0.0 || !all[s].dist[t].is_finite() {
                continue;
            }
            let mut hits = count_through(s, t, seq);
            if !g.is_directed() && seq.len() > 1 {
                hits += count_through(s, t, &reversed);
            }
            total += hits / sigma_st;
        }
    }
    Ok(total)
}

/// Newman modularity of a partition.
pub fn modularity(g: &Graph, cs: &CommunityStructure) -> Result<f64, GraphError> {
    let m = g.edge_count() as f64;
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    let mut internal = vec![0.0; cs.community_count()];
    let mut degree_sum = vec![0.0; cs.community_count()];
    for v in 0..g.node_count() {
        degree_sum[cs.community_of(v)] += g.degree(v) as f64;
        for &u in g.neighbors(v) {
            if v < u && cs.community_of(v) == cs.community_of(u) {
                internal[cs.community_of(v)] += 1.0;
            }
        }
    }
    Ok((0..cs.community_count())
        .map(|c| internal[c] / m - (degree_sum[c] / (2.0 * m)).powi(2))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sample13_classic_values() {
        let g = fixtures::sample_network_13();
        let deg = classic_centrality(&g, CentralityKind::Degree);
        assert_eq!(deg[g.node_id("v1").unwrap()], 5.0);
        assert_eq!(deg[g.node_id("v2").unwrap()], 5.0);
        let clo = classic_centrality(&g, CentralityKind::Closeness);
        let c8 = clo[g.node_id("v8").unwrap()];
        assert_eq!(c8, 22.0);
        assert!(clo.iter().all(|&c| c >= c8));
        let bet = classic_centrality(&g, CentralityKind::Betweenness);
        let b2 = bet[g.node_id("v2").unwrap()];
        assert!((b2 - 32.0).abs() < 1e-9);
        assert!(bet.iter().all(|&b| b <= b2 + 1e-9));
    }

    #[test]
    fn group_measures_reject_empty_sets() {
        let g = fixtures::path_graph(3);
        for kind in [
            CentralityKind::Degree,
            CentralityKind::Closeness,
            CentralityKind::Betweenness,
        ] {
            assert!(group_centrality(&g, kind, &[]).is_err());
        }
    }

    #[test]
    fn group_degree_of_two_hubs() {
        let g = fixtures::sample_network_13();
        let set = [g.node_id("v1").unwrap(), g.node_id("v2").unwrap()];
        let v = group_centrality(&g, CentralityKind::Degree, &set).unwrap();
        assert_eq!(v, 7.0);
    }

    #[test]
    fn group_betweenness_of_double_star_centers() {
        let g = fixtures::double_star_10();
        let set = [g.node_id("v2").unwrap(), g.node_id("v3").unwrap()];
        let v = group_centrality(&g, CentralityKind::Betweenness, &set).unwrap();
        assert_eq!(v, 28.0);
    }

    #[test]
    fn singleton_group_matches_classic() {
        let g = fixtures::sample_network_13();
        for kind in [
            CentralityKind::Degree,
            CentralityKind::Closeness,
            CentralityKind::Betweenness,
        ] {
            let classic = classic_centrality(&g, kind);
            for v in 0..g.node_count() {
                let grp = group_centrality(&g, kind, &[v]).unwrap();
                assert!(
                    (grp - classic[v]).abs() < 1e-9,
                    "{kind:?} mismatch at {v}: {grp} vs {}",
                    classic[v]
                );
            }
        }
    }

    #[test]
    fn directed_singleton_groups_match_classic() {
        let g = Graph::from_edges(
            &[("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "c")],
            true,
        )
        .unwrap();
        for kind in [
            CentralityKind::Degree,
            CentralityKind::Closeness,
            CentralityKind::Betweenness,
        ] {
            let classic = classic_centrality(&g, kind);
            for v in 0..g.node_count() {
                let grp = group_centrality(&g, kind, &[v]).unwrap();
                assert!(
                    (grp - classic[v]).abs() < 1e-9,
                    "{kind:?} at {v}: {grp} vs {}",
                    classic[v]
                );
            }
        }
        // Directed single-node path scores count ordered pairs.
        let single = path_betweenness(&g, &[g.node_id("b").unwrap()]).unwrap();
        let classic = classic_centrality(&g, CentralityKind::Betweenness);
        assert!((single - classic[g.node_id("b").unwrap()]).abs() < 1e-9);
    }

    #[test]
    fn path_betweenness_on_p4() {
        let g = fixtures::path_graph(4);
        assert_eq!(path_betweenness(&g, &[1, 2]).unwrap(), 1.0);
        assert_eq!(path_betweenness(&g, &[2, 1]).unwrap(), 1.0);
        assert_eq!(path_betweenness(&g, &[0, 1, 2]).unwrap(), 0.0);
    }

    #[test]
    fn path_betweenness_rejects_duplicates() {
        let g = fixtures::path_graph(4);
        assert!(path_betweenness(&g, &[1, 1]).is_err());
    }

    #[test]
    fn full_path_exhausts_endpoints() {
        let g = fixtures::path_graph(3);
        assert_eq!(path_betweenness(&g, &[0, 1, 2]).unwrap(), 0.0);
    }

    #[test]
    fn modularity_cases() {
        let tri2 = Graph::from_edges(
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "a"),
                ("x", "y"),
                ("y", "z"),
                ("z", "x"),
            ],
            false,
        )
        .unwrap();
        let whole = CommunityStructure::whole(6);
        assert!((modularity(&tri2, &whole).unwrap() - 0.0).abs() < 1e-12);
        let split = CommunityStructure::new(vec![0, 0, 0, 1, 1, 1]).unwrap();
        assert!((modularity(&tri2, &split).unwrap() - 0.5).abs() < 1e-12);
        let tri = fixtures::cycle_graph(3);
        let singles = CommunityStructure::singletons(3);
        assert!((modularity(&tri, &singles).unwrap() + 1.0 / 3.0).abs() < 1e-12);
        let empty = Graph::parse_edge_list("", false).unwrap();
        let cs = CommunityStructure::new(vec![]).unwrap();
        assert!(modularity(&empty, &cs).is_err());
    }
}
