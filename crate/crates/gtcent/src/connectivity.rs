//! Shapley value of connectivity games: a coalition is worth `f(C)` when
//! its induced subgraph is connected (singletons included) and 0
//! otherwise.
//!
//! Three solvers cover the cost spectrum: a `2^|V|` coalition scan, an
//! exact enumerator that touches only connected coalitions, and an
//! unbiased coalition sampler. All of them work on bitmasks, so graphs
//! are limited to 64 nodes here; directed edges are treated as
//! undirected for connectivity.

use crate::games::GameError;
use crate::graph::{Graph, GraphError, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConnectivityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Exact-scan ceiling (override with `_with_limit`).
pub const DEFAULT_GENERAL_LIMIT: usize = 22;

/// How a connected coalition is valued.
pub enum ConnectivityValue {
    /// Every connected coalition is worth 1.
    Unit,
    /// Edge count divided by total edge weight; a connected coalition
    /// without edges (a singleton) is worth 0.
    EdgesOverWeight,
    /// Arbitrary valuation of a connected node set. Node weights are
    /// reachable through the graph handle.
    Custom(Box<dyn Fn(&Graph, &[NodeId]) -> f64 + Sync>),
}

pub struct ConnectivityGame<'g> {
    graph: &'g Graph,
    value: ConnectivityValue,
    adj: Vec<u64>,
}

impl<'g> ConnectivityGame<'g> {
    pub fn new(graph: &'g Graph, value: ConnectivityValue) -> Result<Self, ConnectivityError> {
        let n = graph.node_count();
        if n > 64 {
            return Err(GraphError::TooLarge { limit: 64, got: n }.into());
        }
        Ok(ConnectivityGame {
            graph,
            value,
            adj: crate::graph::adjacency_masks(graph),
        })
    }

    pub fn unit(graph: &'g Graph) -> Result<Self, ConnectivityError> {
        Self::new(graph, ConnectivityValue::Unit)
    }

    pub fn edges_over_weight(graph: &'g Graph) -> Result<Self, ConnectivityError> {
        Self::new(graph, ConnectivityValue::EdgesOverWeight)
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    fn full_mask(&self) -> u64 {
        full_mask(self.node_count())
    }

    fn connected(&self, mask: u64) -> bool {
        connected_mask(&self.adj, mask)
    }

    fn neighborhood(&self, mask: u64) -> u64 {
        let mut nb = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nb |= self.adj[v];
        }
        nb & !mask
    }

    /// Valuation of a coalition already known to be connected.
    fn raw_value(&self, mask: u64) -> f64 {
        match &self.value {
            ConnectivityValue::Unit => 1.0,
            ConnectivityValue::EdgesOverWeight => {
                let mut edges = 0usize;
                let mut weight = 0.0;
                let mut rest = mask;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    for (u, lambda) in self.graph.weighted_neighbors(v) {
                        if u > v && mask >> u & 1 == 1 {
                            edges += 1;
                            weight += lambda;
                        }
                    }
                }
                if edges == 0 {
                    0.0
                } else {
                    edges as f64 / weight
                }
            }
            ConnectivityValue::Custom(f) => {
                let members: Vec<NodeId> = mask_members(mask);
                f(self.graph, &members)
            }
        }
    }

    /// The characteristic function on an arbitrary node set.
    pub fn coalition_value(&self, members: &[NodeId]) -> f64 {
        let mask = members.iter().fold(0u64, |m, &v| m | (1 << v));
        if mask == 0 || !self.connected(mask) {
            0.0
        } else {
            self.raw_value(mask)
        }
    }

    fn pivotal(&self, mask: u64) -> u64 {
        if mask.count_ones() <= 2 {
            0
        } else {
            articulation_of_mask(&self.adj, mask)
        }
    }
}

/// Characteristic function of a connectivity game on a node set;
/// connectivity is decided first, then the preset valuation applies.
pub fn nu_connectivity(game: &ConnectivityGame, members: &[NodeId]) -> f64 {
    game.coalition_value(members)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_members(mask: u64) -> Vec<NodeId> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

fn connected_mask(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut reached = mask & mask.wrapping_neg();
    loop {
        let mut next = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v] & mask;
        }
        if next == reached {
            return reached == mask;
        }
        reached = next;
    }
}

/// Cut vertices of the subgraph induced by `mask` (assumed connected).
fn articulation_of_mask(adj: &[u64], mask: u64) -> u64 {
    fn dfs(
        v: usize,
        parent: usize,
        adj: &[u64],
        mask: u64,
        timer: &mut u32,
        disc: &mut [u32; 64],
        low: &mut [u32; 64],
        cuts: &mut u64,
    ) {
        *timer += 1;
        disc[v] = *timer;
        low[v] = *timer;
        let mut children = 0u32;
        let mut rest = adj[v] & mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if disc[u] == 0 {
                children += 1;
                dfs(u, v, adj, mask, timer, disc, low, cuts);
                low[v] = low[v].min(low[u]);
                if parent != usize::MAX && low[u] >= disc[v] {
                    *cuts |= 1 << v;
                }
            } else if u != parent {
                low[v] = low[v].min(disc[u]);
            }
        }
        if parent == usize::MAX && children > 1 {
            *cuts |= 1 << v;
        }
    }

    let mut disc = [0u32; 64];
    let mut low = [0u32; 64];
    let mut cuts = 0u64;
    let mut timer = 0u32;
    let root = mask.trailing_zeros() as usize;
    dfs(
        root,
        usize::MAX,
        adj,
        mask,
        &mut timer,
        &mut disc,
        &mut low,
        &mut cuts,
    );
    cuts
}

/// Shapley permutation weights shared with the oracles.
fn subset_weights(n: usize) -> Vec<f64> {
    crate::games::shapley_subset_weights(n)
}

/// Baseline exact solver scanning all `2^|V|` coalitions and applying
/// the three non-zero marginal cases.
pub fn general_sv_connectivity(game: &ConnectivityGame) -> Result<Vec<f64>, ConnectivityError> {
    general_sv_connectivity_with_limit(game, DEFAULT_GENERAL_LIMIT)
}

pub fn general_sv_connectivity_with_limit(
    game: &ConnectivityGame,
    limit: usize,
) -> Result<Vec<f64>, ConnectivityError> {
    let n = game.node_count();
    if n > limit {
        return Err(GameError::TooManyPlayers {
            concept: "connectivity scan",
            limit,
            got: n,
        }
        .into());
    }
    let w = subset_weights(n);
    let mut phi = vec![0.0; n];
    // The empty coalition: every player's entry creates a singleton.
    for v in 0..n {
        phi[v] += w[0] * game.raw_value(1 << v);
    }
    for mask in 1u64..full_mask(n) {
        let k = mask.count_ones() as usize;
        if game.connected(mask) {
            let val = game.raw_value(mask);
            let nb = game.neighborhood(mask);
            let outside = full_mask(n) & !mask;
            let mut rest = outside;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if nb >> v & 1 == 1 {
                    // Joining keeps the coalition connected.
                    phi[v] += w[k] * (game.raw_value(mask | (1 << v)) - val);
                } else {
                    // Joining disconnects it and destroys the value.
                    phi[v] -= w[k] * val;
                }
            }
        } else {
            let nb = game.neighborhood(mask);
            let mut rest = nb;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let joined = mask | (1 << v);
                if game.connected(joined) {
                    phi[v] += w[k] * game.raw_value(joined);
                }
            }
        }
    }
    Ok(phi)
}

/// Exact solver enumerating only connected coalitions. Returns the
/// scores and the number of coalitions visited.
pub fn faster_svcg_with_stats(game: &ConnectivityGame) -> (Vec<f64>, usize) {
    let n = game.node_count();
    let w = subset_weights(n);
    let mut phi = vec![0.0; n];
    let mut visited = 0usize;
    let full = game.full_mask();

    // Scores a connected coalition: members get the join/bridge term,
    // non-member non-neighbors the disconnection loss.
    let mut contribute = |mask: u64, pivotal: u64, phi: &mut [f64]| {
        visited += 1;
        // The incrementally maintained pivotal set must equal a fresh
        // cut-vertex search at every coalition.
        debug_assert_eq!(pivotal, game.pivotal(mask));
        let k = mask.count_ones() as usize;
        let val = game.raw_value(mask);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pivotal >> v & 1 == 1 {
                // Without v the coalition falls apart: v carries it all.
                phi[v] += w[k - 1] * val;
            } else {
                let without = mask & !(1 << v);
                let prev = if without == 0 {
                    0.0
                } else {
                    game.raw_value(without)
                };
                phi[v] += w[k - 1] * (val - prev);
            }
        }
        if k < n {
            let strangers = full & !mask & !game.neighborhood(mask);
            let mut rest = strangers;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                phi[v] -= w[k] * val;
            }
        }
    };

    // Expansion in root order: every connected coalition is reached from
    // its minimum-index node exactly once.
    struct Frame {
        mask: u64,
        forbidden: u64,
        pivotal: u64,
    }

    fn expand(
        game: &ConnectivityGame,
        frame: Frame,
        contribute: &mut impl FnMut(u64, u64, &mut [f64]),
        phi: &mut [f64],
    ) {
        let ext = game.neighborhood(frame.mask) & !frame.forbidden;
        if ext == 0 {
            return;
        }
        let mut s = ext;
        loop {
            let (mask, pivotal) = grow(game, frame.mask, frame.pivotal, s);
            contribute(mask, pivotal, phi);
            expand(
                game,
                Frame {
                    mask,
                    forbidden: frame.forbidden | ext,
                    pivotal,
                },
                contribute,
                phi,
            );
            s = (s - 1) & ext;
            if s == 0 {
                break;
            }
        }
    }

    // Incremental pivotal maintenance: a pendant attachment promotes its
    // anchor, any new cycle forces a fresh cut-vertex search.
    fn grow(game: &ConnectivityGame, mask: u64, pivotal: u64, addition: u64) -> (u64, u64) {
        let mut cur = mask;
        let mut piv = pivotal;
        let mut cycle = false;
        let mut rest = addition;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let anchors = game.adj[v] & cur;
            if anchors.count_ones() > 1 {
                cycle = true;
            }
            cur |= 1 << v;
            if !cycle {
                piv |= anchors;
            }
        }
        if cur.count_ones() <= 2 {
            piv = 0;
        } else if cycle {
            piv = game.pivotal(cur);
        }
        (cur, piv)
    }

    for root in (0..n).rev() {
        let mask = 1u64 << root;
        contribute(mask, 0, &mut phi);
        let forbidden = (mask - 1) | mask;
        expand(
            game,
            Frame {
                mask,
                forbidden,
                pivotal: 0,
            },
            &mut contribute,
            &mut phi,
        );
    }
    (phi, visited)
}

/// Exact Shapley value visiting only connected coalitions;
/// `O((|V| + |E|) * #connected-subgraphs)`.
pub fn faster_svcg(game: &ConnectivityGame) -> Vec<f64> {
    faster_svcg_with_stats(game).0
}

/// Unbiased sampling estimator: draws a coalition size and a coalition
/// uniformly each round, scoring members, pivotal members and stranded
/// outsiders with size-corrected weights. Deterministic per seed.
pub fn approximate_svcg(
    game: &ConnectivityGame,
    max_iter: usize,
    seed: u64,
) -> Result<Vec<f64>, ConnectivityError> {
    if max_iter == 0 {
        return Err(GameError::NoIterations.into());
    }
    let n = game.node_count();
    let full = game.full_mask();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut phi = vec![0.0; n];
    let scale = (n + 1) as f64;
    for _ in 0..max_iter {
        let k = rng.gen_range(0..=n);
        if k == 0 {
            continue;
        }
        let mask = sample_subset(&mut rng, n, k);
        if !game.connected(mask) {
            continue;
        }
        let val = game.raw_value(mask);
        let pivotal = game.pivotal(mask);
        let member_w = scale / k as f64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pivotal >> v & 1 == 1 {
                phi[v] += member_w * val;
            } else {
                let without = mask & !(1 << v);
                let prev = if without == 0 {
                    0.0
                } else {
                    game.raw_value(without)
                };
                phi[v] += member_w * (val - prev);
            }
        }
        if k < n {
            let outsider_w = scale / (n - k) as f64;
            let strangers = full & !mask & !game.neighborhood(mask);
            let mut rest = strangers;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                phi[v] -= outsider_w * val;
            }
        }
    }
    for p in &mut phi {
        *p /= max_iter as f64;
    }
    Ok(phi)
}

fn sample_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> u64 {
    let picks = rand::seq::index::sample(rng, n, k);
    picks.into_iter().fold(0u64, |m, v| m | (1 << v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::games::{coalition_game, shapley_oracle_with_limit, Coalition};
    use crate::graph::connected_induced_subgraphs;

    #[test]
    fn nu_respects_connectivity_and_presets() {
        let p3 = fixtures::with_unit_weights(&fixtures::path_graph(3));
        let unit = ConnectivityGame::unit(&p3).unwrap();
        assert_eq!(nu_connectivity(&unit, &[0, 2]), 0.0);
        assert_eq!(nu_connectivity(&unit, &[0, 1, 2]), 1.0);
        assert_eq!(nu_connectivity(&unit, &[1]), 1.0);
        let edges = ConnectivityGame::edges_over_weight(&p3).unwrap();
        assert_eq!(nu_connectivity(&edges, &[0, 1]), 1.0);
        // A connected singleton has no edges: 0/0 reads as 0.
        assert_eq!(nu_connectivity(&edges, &[0]), 0.0);
        let tri = fixtures::cycle_graph(3);
        let unit = ConnectivityGame::unit(&tri).unwrap();
        assert_eq!(nu_connectivity(&unit, &[0, 1, 2]), 1.0);
    }

    #[test]
    fn general_sv_small_cases() {
        let tri = fixtures::cycle_graph(3);
        let game = ConnectivityGame::unit(&tri).unwrap();
        let phi = general_sv_connectivity(&game).unwrap();
        for &x in &phi {
            assert!((x - 1.0 / 3.0).abs() < 1e-12);
        }
        let p3 = fixtures::path_graph(3);
        let game = ConnectivityGame::unit(&p3).unwrap();
        let phi = general_sv_connectivity(&game).unwrap();
        for (a, b) in phi.iter().zip([1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let mut b = Graph::builder(false);
        b.node("v");
        let single = b.build().unwrap();
        let game = ConnectivityGame::unit(&single).unwrap();
        assert_eq!(general_sv_connectivity(&game).unwrap(), vec![1.0]);
    }

    #[test]
    fn faster_equals_general_and_permutation_oracle() {
        for seed in 0..10u64 {
            let g = if seed % 2 == 0 {
                crate::graph::random::preferential_attachment(8 + (seed as usize % 4), 2, seed)
            } else {
                crate::graph::random::gnm(9, 10, seed)
            };
            let w = crate::graph::random::with_random_integer_weights(&g, 1, 4, seed + 7);
            for game in [
                ConnectivityGame::unit(&w).unwrap(),
                ConnectivityGame::edges_over_weight(&w).unwrap(),
            ] {
                let general = general_sv_connectivity(&game).unwrap();
                let (fast, _) = faster_svcg_with_stats(&game);
                for (a, b) in general.iter().zip(&fast) {
                    assert!((a - b).abs() < 1e-9, "seed {seed}: {general:?} vs {fast:?}");
                }
                let n = w.node_count();
                let oracle = shapley_oracle_with_limit(
                    &coalition_game(n, |c: Coalition| game.coalition_value(&c.to_vec())),
                    n,
                )
                .unwrap();
                for (a, b) in fast.iter().zip(&oracle) {
                    assert!((a - b).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn enumeration_count_matches_subgraph_count() {
        for seed in 0..5u64 {
            let g = crate::graph::random::gnm(10, 14, seed + 30);
            let game = ConnectivityGame::unit(&g).unwrap();
            let (_, visited) = faster_svcg_with_stats(&game);
            let expected = connected_induced_subgraphs(&g, |_| {}).unwrap();
            assert_eq!(visited, expected);
        }
    }

    #[test]
    fn efficiency_on_connected_graphs() {
        let g = fixtures::sample_network_13();
        let game = ConnectivityGame::unit(&g).unwrap();
        let phi = faster_svcg(&game);
        let all: Vec<usize> = (0..g.node_count()).collect();
        let grand = game.coalition_value(&all);
        assert!((phi.iter().sum::<f64>() - grand).abs() < 1e-9);
    }

    #[test]
    fn custom_valuations_see_node_weights() {
        let mut g = fixtures::path_graph(3);
        g.set_node_weights(vec![2.0, 5.0, 1.0]);
        let game = ConnectivityGame::new(
            &g,
            ConnectivityValue::Custom(Box::new(|g, members| {
                members.iter().map(|&v| g.node_weight(v)).sum()
            })),
        )
        .unwrap();
        assert_eq!(nu_connectivity(&game, &[0, 1]), 7.0);
        assert_eq!(nu_connectivity(&game, &[0, 2]), 0.0);
        let phi = faster_svcg(&game);
        let total: f64 = phi.iter().sum();
        assert!((total - 8.0).abs() < 1e-12);
        let general = general_sv_connectivity(&game).unwrap();
        for (a, b) in phi.iter().zip(&general) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn trees_make_the_enumerator_far_cheaper_than_the_scan() {
        // A tree's connected coalitions are a vanishing fraction of all
        // subsets, so the enumerator wins on workload and wall time.
        let g = crate::graph::random::random_tree(18, 2);
        let game = ConnectivityGame::unit(&g).unwrap();
        let start = std::time::Instant::now();
        let (fast, visited) = faster_svcg_with_stats(&game);
        let fast_time = start.elapsed();
        assert!(visited < (1usize << 18) / 10, "visited {visited}");
        let start = std::time::Instant::now();
        let general = general_sv_connectivity(&game).unwrap();
        let general_time = start.elapsed();
        for (a, b) in fast.iter().zip(&general) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!(
            fast_time < general_time,
            "enumerator {fast_time:?} vs scan {general_time:?}"
        );
    }

    #[test]
    fn sampler_is_deterministic_and_converges() {
        let p3 = fixtures::path_graph(3);
        let game = ConnectivityGame::unit(&p3).unwrap();
        let a = approximate_svcg(&game, 20_000, 5).unwrap();
        let b = approximate_svcg(&game, 20_000, 5).unwrap();
        assert_eq!(a, b);
        let big = approximate_svcg(&game, 1_000_000, 5).unwrap();
        for (x, y) in big.iter().zip([1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0]) {
            assert!((x - y).abs() < 0.01, "{big:?}");
        }
        assert!(approximate_svcg(&game, 0, 5).is_err());
    }

    #[test]
    fn sampler_is_unbiased_across_seeds() {
        let g = crate::graph::random::preferential_attachment(9, 2, 3);
        let game = ConnectivityGame::unit(&g).unwrap();
        let exact = faster_svcg(&game);
        let n = g.node_count();
        let seeds = 100usize;
        let samples_per_seed = 2_000usize;
        let mut means = vec![0.0; n];
        let mut sq = vec![0.0; n];
        for s in 0..seeds {
            let est = approximate_svcg(&game, samples_per_seed, s as u64).unwrap();
            for v in 0..n {
                means[v] += est[v];
                sq[v] += est[v] * est[v];
            }
        }
        for v in 0..n {
            let mean = means[v] / seeds as f64;
            let var = (sq[v] / seeds as f64 - mean * mean).max(0.0);
            let se = (var / seeds as f64).sqrt().max(1e-9);
            assert!(
                (mean - exact[v]).abs() <= 3.0 * se,
                "node {v}: mean {mean} exact {} se {se}",
                exact[v]
            );
        }
    }
}
