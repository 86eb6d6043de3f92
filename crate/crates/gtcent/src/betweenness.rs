//! Betweenness-flavored game-theoretic centralities.
//!
//! A single parametrised framework generalizes Brandes' accumulation:
//! the pair dependency of `{s, t}` on `v` is scaled by `f(d(s, t))` and
//! every source adds a per-node term `g(d(s, v))`, both functions of the
//! node-count distance (the number of nodes on a geodesic, so adjacent
//! nodes sit at distance 2). Picking `f = 1/d`, `g = (2 - d)/(2d)` makes
//! the result the exact Shapley value of the group-betweenness game; a
//! distribution over coalition sizes generalizes that to any Semivalue.
//! Weighted graphs run the same recursions indexed by geodesic node
//! counts, tracked with path-count polynomials.

use crate::graph::{
    path_count_polynomials, sssp, DistanceMode, Graph, NodeId, PathCountPolynomial, SsspResult,
};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BetweennessError {
    #[error("size distribution has {got} entries, expected {expected}")]
    WrongArity { got: usize, expected: usize },
    #[error("masses must form a probability distribution (sum {sum})")]
    NotADistribution { sum: f64 },
    #[error("this solver requires a weighted graph")]
    WeightedGraphRequired,
    #[error(
        "the group-betweenness game identity holds on undirected graphs only; \
         use the parametrised framework directly for directed measures"
    )]
    DirectedUnsupported,
}

fn require_undirected(g: &Graph) -> Result<(), BetweennessError> {
    if g.is_directed() {
        Err(BetweennessError::DirectedUnsupported)
    } else {
        Ok(())
    }
}

/// Probability distribution over coalition sizes `1..=n`, the parameter
/// of the Semivalue-based measures.
#[derive(Debug, Clone)]
pub struct SizeDistribution {
    /// `pd[k]` for `k` in `1..=n`; index 0 is unused.
    pd: Vec<f64>,
}

impl SizeDistribution {
    pub fn new(masses: Vec<f64>) -> Result<Self, BetweennessError> {
        let sum: f64 = masses.iter().sum();
        if masses.iter().any(|&p| p < 0.0) || (sum - 1.0).abs() > 1e-12 {
            return Err(BetweennessError::NotADistribution { sum });
        }
        let mut pd = Vec::with_capacity(masses.len() + 1);
        pd.push(0.0);
        pd.extend(masses);
        Ok(SizeDistribution { pd })
    }

    /// Uniform over all sizes; the Shapley value's distribution.
    pub fn uniform(n: usize) -> Self {
        SizeDistribution::new(vec![1.0 / n as f64; n]).expect("uniform is a distribution")
    }

    /// All mass on one coalition size.
    pub fn concentrated(size: usize, n: usize) -> Self {
        let mut masses = vec![0.0; n];
        masses[size - 1] = 1.0;
        SizeDistribution::new(masses).expect("point mass is a distribution")
    }

    pub fn arity(&self) -> usize {
        self.pd.len() - 1
    }

    pub fn mass(&self, size: usize) -> f64 {
        self.pd[size]
    }

    pub fn masses(&self) -> &[f64] {
        &self.pd[1..]
    }

    /// Per-join-size weights `beta(k) = pd(k + 1)`, for driving the
    /// Semivalue oracle with the same solution concept.
    pub fn to_semivalue_weights(&self) -> crate::games::SemivalueWeights {
        crate::games::SemivalueWeights::new(self.pd[1..].to_vec())
            .expect("size distribution is a distribution")
    }

    fn check_arity(&self, n: usize) -> Result<(), BetweennessError> {
        if self.arity() != n {
            Err(BetweennessError::WrongArity {
                got: self.arity(),
                expected: n,
            })
        } else {
            Ok(())
        }
    }
}

/// Parametrised betweenness centrality on an unweighted graph:
/// `c(v) = sum_s (delta_s(v) + g(d(s, v)))` with pair dependencies scaled
/// by `f` of the node-count distance. `O(|V||E|)`.
pub fn pbc<F, G>(g: &Graph, f_delta: F, g_delta: G) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync,
    G: Fn(usize) -> f64 + Sync,
{
    let n = g.node_count();
    let partials: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let sp = sssp(g, s, DistanceMode::Unweighted);
            let mut out = vec![0.0; n];
            accumulate_source(g, &sp, &f_delta, &g_delta, &mut out);
            out
        })
        .collect();
    finish(g, partials, n)
}

fn accumulate_source<F, G>(g: &Graph, sp: &SsspResult, f_delta: &F, g_delta: &G, out: &mut [f64])
where
    F: Fn(usize) -> f64,
    G: Fn(usize) -> f64,
{
    let n = g.node_count();
    let mut delta = vec![0.0; n];
    for &w in sp.order.iter().rev() {
        let d_w = sp.dist[w] as usize;
        for &v in &sp.preds[w] {
            delta[v] += sp.sigma[v] / sp.sigma[w] * (f_delta(d_w) + delta[w]);
        }
        if w != sp.source {
            let g_term = g_delta(d_w);
            out[w] += delta[w]
                + if g.is_directed() {
                    g_term
                } else {
                    2.0 * g_term
                };
        }
    }
}

/// Undirected accumulation walks every pair from both ends, so totals
/// are halved (sources were already double-weighted for the g term).
fn finish(g: &Graph, partials: Vec<Vec<f64>>, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for part in partials {
        for (o, p) in out.iter_mut().zip(part) {
            *o += p;
        }
    }
    if !g.is_directed() {
        for o in &mut out {
            *o /= 2.0;
        }
    }
    out
}

/// Exact Shapley value of the group-betweenness game on an unweighted
/// graph; same complexity as plain betweenness. Undirected only: the
/// endpoint symmetry behind the pair weights does not survive edge
/// directions.
pub fn svb(g: &Graph) -> Result<Vec<f64>, BetweennessError> {
    require_undirected(g)?;
    Ok(pbc(
        g,
        |d| 1.0 / d as f64,
        |d| (2.0 - d as f64) / (2.0 * d as f64),
    ))
}

/// Pair weight for coalition size `k` at node-count distance `d`: the
/// probability that a random (k-1)-subset of the other nodes avoids a
/// geodesic of `d` nodes, `C(n-d, k-1)/C(n-1, k-1)`, tabulated over
/// `d = 1..=n+1` with a running product (no factorials).
fn survival_table(n: usize, k: usize) -> Vec<f64> {
    let mut table = vec![0.0; n + 2];
    let mut cur = 1.0;
    for d in 1..=n {
        table[d] = cur;
        let denom = (n - d) as f64;
        if denom <= 0.0 {
            cur = 0.0;
        } else {
            let numer = (n as f64 - d as f64 - k as f64 + 1.0).max(0.0);
            cur = cur * numer / denom;
        }
    }
    table
}

/// Semivalue of the group-betweenness game for an arbitrary coalition
/// size distribution; `O(|V|^2 |E|)`.
pub fn semivalue_betweenness(
    g: &Graph,
    pd: &SizeDistribution,
) -> Result<Vec<f64>, BetweennessError> {
    require_undirected(g)?;
    let n = g.node_count();
    pd.check_arity(n)?;
    // One BFS per source, swept once per coalition size.
    let partials: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let sp = sssp(g, s, DistanceMode::Unweighted);
            let mut out = vec![0.0; n];
            let mut weighted = vec![0.0; n];
            for k in 1..=n {
                let mass = pd.mass(k);
                if mass == 0.0 {
                    continue;
                }
                let table = survival_table(n, k);
                let shift = (k as f64 - n as f64) / (n as f64 - 1.0);
                weighted.fill(0.0);
                accumulate_source(g, &sp, &|d| table[d], &|d| table[d] + shift, &mut weighted);
                for (o, w) in out.iter_mut().zip(&weighted) {
                    *o += mass * w;
                }
            }
            out
        })
        .collect();
    Ok(finish(g, partials, n))
}

/// Parametrised betweenness centrality on a weighted graph; `f` and `g`
/// take the geodesic node count. `O(|V|^2 |E| + |V|^2 log |V|)`.
pub fn wpbc<F, G>(g: &Graph, f_delta: F, g_delta: G) -> Result<Vec<f64>, BetweennessError>
where
    F: Fn(usize) -> f64 + Sync,
    G: Fn(usize) -> f64 + Sync,
{
    if !g.is_weighted() {
        return Err(BetweennessError::WeightedGraphRequired);
    }
    let n = g.node_count();
    let partials: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let data = WeightedSourceData::compute(g, s);
            let mut out = vec![0.0; n];
            let mut scratch = data.scratch(g);
            data.accumulate(g, &f_delta, &g_delta, &mut scratch, &mut out);
            out
        })
        .collect();
    Ok(finish(g, partials, n))
}

/// Per-source geodesic data for the weighted framework: predecessor DAG
/// plus size-indexed path counts.
struct WeightedSourceData {
    source: NodeId,
    sp: SsspResult,
    t: Vec<PathCountPolynomial>,
}

impl WeightedSourceData {
    fn compute(g: &Graph, s: NodeId) -> Self {
        let sp = sssp(g, s, DistanceMode::Weighted);
        let t = path_count_polynomials(g, s);
        WeightedSourceData { source: s, sp, t }
    }

    fn scratch(&self, g: &Graph) -> Vec<Vec<f64>> {
        let n = g.node_count();
        vec![vec![0.0; n + 2]; n]
    }

    fn accumulate<F, G>(
        &self,
        g: &Graph,
        f_delta: &F,
        g_delta: &G,
        reach: &mut [Vec<f64>],
        out: &mut [f64],
    ) where
        F: Fn(usize) -> f64,
        G: Fn(usize) -> f64,
    {
        let n = g.node_count();
        // reach[v][i]: downstream dependency carried by one geodesic
        // prefix that arrives at v with i nodes. Keeping this per prefix
        // (rather than aggregated) stays exact when a node's prefixes
        // come in several sizes; the node totals multiply back by the
        // size-indexed prefix counts. Only sizes a prefix actually
        // attains matter: anything off the count polynomial's support
        // multiplies by zero upstream.
        for row in reach.iter_mut() {
            row.fill(0.0);
        }
        for &w in self.sp.order.iter().rev() {
            let sigma_w = self.sp.sigma[w];
            for &v in &self.sp.preds[w] {
                for (i, _) in self.t[v].support() {
                    if i >= n {
                        continue;
                    }
                    reach[v][i] += f_delta(i + 1) / sigma_w + reach[w][i + 1];
                }
            }
            if w != self.source {
                let mut acc = 0.0;
                for (i, t_wi) in self.t[w].support() {
                    if i > n {
                        continue;
                    }
                    let g_term = t_wi / sigma_w * g_delta(i);
                    acc += t_wi * reach[w][i]
                        + if g.is_directed() {
                            g_term
                        } else {
                            2.0 * g_term
                        };
                }
                out[w] += acc;
            }
        }
    }
}

/// Exact Shapley value of the group-betweenness game on a weighted graph.
pub fn wsvb(g: &Graph) -> Result<Vec<f64>, BetweennessError> {
    require_undirected(g)?;
    wpbc(
        g,
        |i| 1.0 / i as f64,
        |i| (2.0 - i as f64) / (2.0 * i as f64),
    )
}

/// Semivalue of the weighted group-betweenness game;
/// `O(|V|^3 |E| + |V|^3 log |V|)`.
pub fn wsb(g: &Graph, pd: &SizeDistribution) -> Result<Vec<f64>, BetweennessError> {
    require_undirected(g)?;
    if !g.is_weighted() {
        return Err(BetweennessError::WeightedGraphRequired);
    }
    let n = g.node_count();
    pd.check_arity(n)?;
    let partials: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let data = WeightedSourceData::compute(g, s);
            let mut out = vec![0.0; n];
            let mut weighted = vec![0.0; n];
            let mut scratch = data.scratch(g);
            for k in 1..=n {
                let mass = pd.mass(k);
                if mass == 0.0 {
                    continue;
                }
                let table = survival_table(n, k);
                let shift = (k as f64 - n as f64) / (n as f64 - 1.0);
                weighted.fill(0.0);
                data.accumulate(
                    g,
                    &|i| table[i],
                    &|i| table[i] + shift,
                    &mut scratch,
                    &mut weighted,
                );
                for (o, w) in out.iter_mut().zip(&weighted) {
                    *o += mass * w;
                }
            }
            out
        })
        .collect();
    Ok(finish(g, partials, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::games::{coalition_game, semivalue_oracle, shapley_oracle, Coalition};
    use crate::graph::{classic_centrality, group_centrality, CentralityKind};

    fn group_betweenness_game(g: &Graph) -> impl crate::games::CoalitionGame + '_ {
        coalition_game(g.node_count(), move |c: Coalition| {
            group_centrality(g, CentralityKind::Betweenness, &c.to_vec()).unwrap()
        })
    }

    #[test]
    fn pbc_with_unit_weighting_is_classic_betweenness() {
        let g = fixtures::sample_network_13();
        let pbc_scores = pbc(&g, |_| 1.0, |_| 0.0);
        let classic = classic_centrality(&g, CentralityKind::Betweenness);
        for (a, b) in pbc_scores.iter().zip(&classic) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!((pbc_scores[g.node_id("v2").unwrap()] - 32.0).abs() < 1e-9);
    }

    #[test]
    fn pbc_distance_scaled_and_closeness_like() {
        let g = fixtures::path_graph(3);
        let scaled = pbc(&g, |d| 1.0 / d as f64, |_| 0.0);
        assert!((scaled[1] - 1.0 / 3.0).abs() < 1e-12);
        assert!(scaled[0].abs() < 1e-12 && scaled[2].abs() < 1e-12);
        let closeness_like = pbc(&g, |_| 0.0, |d| 1.0 / d as f64);
        assert!((closeness_like[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn directed_accumulation_counts_ordered_pairs_once() {
        // a -> b -> c: the single geodesic pair (a, c) crosses b.
        let g = Graph::from_edges(&[("a", "b"), ("b", "c")], true).unwrap();
        let scores = pbc(&g, |_| 1.0, |_| 0.0);
        assert_eq!(scores, vec![0.0, 1.0, 0.0]);
        // Source terms are applied once per reachable ordered pair.
        let g_only = pbc(&g, |_| 0.0, |d| 1.0 / d as f64);
        // b is reached from a at node-distance 2; c from a at 3, from b at 2.
        assert!((g_only[1] - 0.5).abs() < 1e-12);
        assert!((g_only[2] - (1.0 / 3.0 + 0.5)).abs() < 1e-12);
    }

    #[test]
    fn game_identity_solvers_reject_directed_graphs() {
        // The parametrised framework handles directed graphs, but the
        // endpoint terms behind the game identity do not: a pure source
        // node takes losses the sweep never charges it for.
        let g = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d")], true).unwrap();
        assert!(matches!(
            svb(&g),
            Err(BetweennessError::DirectedUnsupported)
        ));
        assert!(semivalue_betweenness(&g, &SizeDistribution::uniform(4)).is_err());
        let w = Graph::from_weighted_edges(&[("a", "b", 2.0)], true).unwrap();
        assert!(wsvb(&w).is_err());
        assert!(wsb(&w, &SizeDistribution::uniform(2)).is_err());
    }

    #[test]
    fn svb_on_p3_matches_brute_force() {
        let g = fixtures::path_graph(3);
        let fast = svb(&g).unwrap();
        let expect = [-1.0 / 6.0, 1.0 / 3.0, -1.0 / 6.0];
        for (a, b) in fast.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12);
        }
        let oracle = shapley_oracle(&group_betweenness_game(&g)).unwrap();
        for (a, b) in fast.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn svb_two_hub_values_from_the_worked_example() {
        let g = fixtures::two_hub_network_19();
        let scores = svb(&g).unwrap();
        let v1 = scores[g.node_id("v1").unwrap()];
        let v2 = scores[g.node_id("v2").unwrap()];
        assert!((v1 - 18.2).abs() < 5e-4, "v1 got {v1}");
        assert!((v2 - 16.0833).abs() < 5e-4, "v2 got {v2}");
        assert!(scores.iter().sum::<f64>().abs() < 1e-9);
    }

    #[test]
    fn svb_sums_to_zero_and_decomposes() {
        for seed in 0..4u64 {
            let g = crate::graph::random::connected_gnm(9, 6, seed);
            let n = g.node_count();
            let scores = svb(&g).unwrap();
            assert!(scores.iter().sum::<f64>().abs() < 1e-9);
            // Distance-scaled betweenness plus node-count closeness,
            // shifted by half the graph.
            let scaled = pbc(&g, |d| 1.0 / d as f64, |_| 0.0);
            let inv_close = pbc(&g, |_| 0.0, |d| 1.0 / d as f64);
            for v in 0..n {
                let expected = scaled[v] + inv_close[v] - (n as f64 - 1.0) / 2.0;
                assert!((scores[v] - expected).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn svb_normalization_bound_holds() {
        for seed in 0..4u64 {
            let g = crate::graph::random::connected_gnm(8, 7, seed + 50);
            let scores = svb(&g).unwrap();
            let max_b = classic_centrality(&g, CentralityKind::Betweenness)
                .into_iter()
                .fold(f64::MIN, f64::max)
                .max(1e-12);
            for &x in &scores {
                let normalized = x / (2.0 * max_b) + 0.5;
                assert!((-1e-9..=1.0 + 1e-9).contains(&normalized));
            }
        }
    }

    #[test]
    fn distributions_are_validated() {
        assert!(SizeDistribution::new(vec![0.5, 0.4]).is_err());
        assert!(SizeDistribution::new(vec![1.5, -0.5]).is_err());
        let g = fixtures::path_graph(4);
        // Wrong arity for this graph.
        let pd = SizeDistribution::uniform(3);
        assert!(semivalue_betweenness(&g, &pd).is_err());
        let w = fixtures::with_unit_weights(&g);
        assert!(wsb(&w, &pd).is_err());
    }

    #[test]
    fn uniform_size_distribution_reproduces_svb() {
        let g = fixtures::sample_network_13();
        let uniform = SizeDistribution::uniform(g.node_count());
        let semi = semivalue_betweenness(&g, &uniform).unwrap();
        let sv = svb(&g).unwrap();
        for (a, b) in semi.iter().zip(&sv) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn point_mass_distributions_on_p3() {
        let g = fixtures::path_graph(3);
        let singles = semivalue_betweenness(&g, &SizeDistribution::concentrated(1, 3)).unwrap();
        for (a, b) in singles.iter().zip([0.0, 1.0, 0.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let grand = semivalue_betweenness(&g, &SizeDistribution::concentrated(3, 3)).unwrap();
        for &x in &grand {
            assert!(x.abs() < 1e-12);
        }
    }

    #[test]
    fn semivalue_betweenness_matches_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for seed in 0..4u64 {
            let g = crate::graph::random::connected_gnm(7, 5, seed + 20);
            let n = g.node_count();
            for _ in 0..3 {
                let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..1.0)).collect();
                let total: f64 = raw.iter().sum();
                let pd = SizeDistribution::new(raw.iter().map(|x| x / total).collect()).unwrap();
                let fast = semivalue_betweenness(&g, &pd).unwrap();
                let oracle =
                    semivalue_oracle(&group_betweenness_game(&g), &pd.to_semivalue_weights())
                        .unwrap();
                for (a, b) in fast.iter().zip(&oracle) {
                    assert!((a - b).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn weighted_framework_reduces_to_unweighted_on_unit_weights() {
        let g = fixtures::sample_network_13();
        let w = fixtures::with_unit_weights(&g);
        let a = wpbc(&w, |i| 1.0 / i as f64, |_| 0.5).unwrap();
        let b = pbc(&g, |d| 1.0 / d as f64, |_| 0.5);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn weighted_trees_ignore_weight_magnitudes() {
        // Unique geodesics: node counts never depend on the weights.
        let skeleton = crate::graph::random::random_tree(9, 4);
        let weighted = crate::graph::random::with_random_integer_weights(&skeleton, 1, 4, 11);
        let a = wpbc(&weighted, |i| 1.0 / i as f64, |i| 0.25 * i as f64).unwrap();
        let b = pbc(&skeleton, |d| 1.0 / d as f64, |d| 0.25 * d as f64);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn weighted_classic_betweenness_via_wpbc() {
        let g = Graph::from_weighted_edges(&[("a", "b", 2.0), ("b", "c", 5.0)], false).unwrap();
        let scores = wpbc(&g, |_| 1.0, |_| 0.0).unwrap();
        for (x, y) in scores.iter().zip([0.0, 1.0, 0.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        assert!(wpbc(&fixtures::path_graph(3), |_| 1.0, |_| 0.0).is_err());
    }

    #[test]
    fn wsvb_matches_unweighted_and_oracle() {
        let unit = fixtures::with_unit_weights(&fixtures::two_hub_network_19());
        let scores = wsvb(&unit).unwrap();
        assert!((scores[unit.node_id("v1").unwrap()] - 18.2).abs() < 5e-4);
        assert!((scores[unit.node_id("v2").unwrap()] - 16.0833).abs() < 5e-4);

        let p3 = Graph::from_weighted_edges(&[("a", "b", 3.0), ("b", "c", 1.5)], false).unwrap();
        let phi = wsvb(&p3).unwrap();
        for (a, b) in phi.iter().zip([-1.0 / 6.0, 1.0 / 3.0, -1.0 / 6.0]) {
            assert!((a - b).abs() < 1e-12);
        }

        for seed in 0..3u64 {
            let g = crate::graph::random::with_random_integer_weights(
                &crate::graph::random::connected_gnm(8, 6, seed + 70),
                1,
                4,
                seed,
            );
            let fast = wsvb(&g).unwrap();
            let oracle = shapley_oracle(&group_betweenness_game(&g)).unwrap();
            for (a, b) in fast.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-9, "seed {seed}: {fast:?} vs {oracle:?}");
            }
            assert!(fast.iter().sum::<f64>().abs() < 1e-9);
        }
    }

    #[test]
    fn wsb_matches_oracle_and_special_cases() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for seed in 0..3u64 {
            let g = crate::graph::random::with_random_integer_weights(
                &crate::graph::random::connected_gnm(7, 4, seed + 90),
                1,
                3,
                seed,
            );
            let n = g.node_count();
            let uniform = SizeDistribution::uniform(n);
            let a = wsb(&g, &uniform).unwrap();
            let b = wsvb(&g).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-9);
            }
            let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..1.0)).collect();
            let total: f64 = raw.iter().sum();
            let pd = SizeDistribution::new(raw.iter().map(|x| x / total).collect()).unwrap();
            let fast = wsb(&g, &pd).unwrap();
            let oracle =
                semivalue_oracle(&group_betweenness_game(&g), &pd.to_semivalue_weights()).unwrap();
            for (x, y) in fast.iter().zip(&oracle) {
                assert!((x - y).abs() < 1e-9);
            }
        }
        // Unit weights reduce to the unweighted Semivalue measure.
        let g = fixtures::sample_network_13();
        let w = fixtures::with_unit_weights(&g);
        let pd = SizeDistribution::concentrated(2, g.node_count());
        let a = wsb(&w, &pd).unwrap();
        let b = semivalue_betweenness(&g, &pd).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9);
        }
    }
}
