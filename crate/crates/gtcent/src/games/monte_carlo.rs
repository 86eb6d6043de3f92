//! Permutation-sampling Shapley approximation, plus the one-pass marginal
//! contribution blocks for the influence games.

use super::{Coalition, CoalitionGame, GameError};
use crate::degree::{DegreeGameError, DegreeGameSpec};
use crate::graph::{sssp, DistanceMode, Graph, NodeId};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Unbiased Shapley estimate: averages each player's marginal
/// contribution to its predecessors over `max_iter` random permutations.
/// Deterministic for a fixed seed.
pub fn monte_carlo_shapley<G: CoalitionGame + ?Sized>(
    game: &G,
    max_iter: usize,
    seed: u64,
) -> Result<Vec<f64>, GameError> {
    if max_iter == 0 {
        return Err(GameError::NoIterations);
    }
    let n = game.player_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut phi = vec![0.0; n];
    for _ in 0..max_iter {
        order.shuffle(&mut rng);
        let mut prefix = Coalition::EMPTY;
        let mut prev = 0.0;
        for &v in &order {
            prefix = prefix.with(v);
            let cur = game.value(prefix);
            phi[v] += cur - prev;
            prev = cur;
        }
    }
    for p in &mut phi {
        *p /= max_iter as f64;
    }
    Ok(phi)
}

/// One-pass marginal contributions of a whole permutation for the
/// influence games, equivalent to evaluating the characteristic function
/// twice per prefix but in a single sweep over the permutation.
///
/// Distance data for the cutoff and decay games is precomputed once so
/// repeated permutations stay cheap.
pub struct DegreeContributionBlock<'g> {
    graph: &'g Graph,
    spec: DegreeGameSpec,
    /// For the cutoff game: per node, the targets it influences.
    influence: Option<Vec<Vec<NodeId>>>,
    /// For the decay game: full pairwise distance rows.
    distances: Option<Vec<Vec<f64>>>,
}

impl<'g> DegreeContributionBlock<'g> {
    pub fn new(graph: &'g Graph, spec: DegreeGameSpec) -> Result<Self, DegreeGameError> {
        spec.validate(graph)?;
        let n = graph.node_count();
        let mut influence = None;
        let mut distances = None;
        match &spec {
            DegreeGameSpec::G3 { cutoffs } => {
                let mut per_node = vec![Vec::new(); n];
                for v in 0..n {
                    let sp = sssp(graph, v, DistanceMode::Weighted);
                    for u in 0..n {
                        if u != v && sp.dist[u] <= cutoffs[u] {
                            per_node[v].push(u);
                        }
                    }
                }
                influence = Some(per_node);
            }
            DegreeGameSpec::G4 { .. } => {
                let rows = (0..n)
                    .map(|v| sssp(graph, v, DistanceMode::Weighted).dist)
                    .collect();
                distances = Some(rows);
            }
            _ => {}
        }
        Ok(DegreeContributionBlock {
            graph,
            spec,
            influence,
            distances,
        })
    }

    /// Marginal contribution of every node when the permutation is
    /// assembled left to right.
    pub fn contributions(&self, permutation: &[NodeId]) -> Vec<f64> {
        let g = self.graph;
        let n = g.node_count();
        debug_assert_eq!(permutation.len(), n);
        let mut contrib = vec![0.0; n];
        match &self.spec {
            DegreeGameSpec::G1 => {
                let mut counted = vec![false; n];
                for &v in permutation {
                    for u in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
                        if !counted[u] {
                            counted[u] = true;
                            contrib[v] += 1.0;
                        }
                    }
                }
            }
            DegreeGameSpec::G2 { thresholds } => {
                let mut counted = vec![false; n];
                let mut edges = vec![0u32; n];
                for &v in permutation {
                    if !counted[v] {
                        counted[v] = true;
                        contrib[v] += 1.0;
                    }
                    for &u in g.neighbors(v) {
                        edges[u] += 1;
                        if !counted[u] && edges[u] >= thresholds[u] {
                            counted[u] = true;
                            contrib[v] += 1.0;
                        }
                    }
                }
            }
            DegreeGameSpec::G3 { .. } => {
                let influence = self.influence.as_ref().expect("precomputed");
                let mut counted = vec![false; n];
                for &v in permutation {
                    if !counted[v] {
                        counted[v] = true;
                        contrib[v] += 1.0;
                    }
                    for &u in &influence[v] {
                        if !counted[u] {
                            counted[u] = true;
                            contrib[v] += 1.0;
                        }
                    }
                }
            }
            DegreeGameSpec::G4 { decay } => {
                let rows = self.distances.as_ref().expect("precomputed");
                let mut best = vec![f64::INFINITY; n];
                for &v in permutation {
                    let row = &rows[v];
                    for u in 0..n {
                        if row[u] < best[u] {
                            let old = if best[u].is_finite() {
                                decay.eval(best[u])
                            } else {
                                0.0
                            };
                            contrib[v] += decay.eval(row[u]) - old;
                            best[u] = row[u];
                        }
                    }
                }
            }
            DegreeGameSpec::G5 { cutoffs } => {
                let mut counted = vec![false; n];
                let mut weight_in = vec![0.0f64; n];
                for &v in permutation {
                    if !counted[v] {
                        counted[v] = true;
                        contrib[v] += 1.0;
                    }
                    for (u, lambda) in g.weighted_neighbors(v) {
                        weight_in[u] += lambda;
                        if !counted[u] && weight_in[u] >= cutoffs[u] {
                            counted[u] = true;
                            contrib[v] += 1.0;
                        }
                    }
                }
            }
        }
        contrib
    }
}

/// Shapley estimate for an influence game using the one-pass blocks.
pub fn monte_carlo_degree_shapley(
    graph: &Graph,
    spec: DegreeGameSpec,
    max_iter: usize,
    seed: u64,
) -> Result<Vec<f64>, DegreeGameError> {
    assert!(max_iter >= 1, "at least one iteration");
    let block = DegreeContributionBlock::new(graph, spec)?;
    let n = graph.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut phi = vec![0.0; n];
    for _ in 0..max_iter {
        order.shuffle(&mut rng);
        for (i, c) in block.contributions(&order).into_iter().enumerate() {
            phi[i] += c;
        }
    }
    for p in &mut phi {
        *p /= max_iter as f64;
    }
    Ok(phi)
}
