//! Node centrality aware of a community structure: coalitional
//! semivalues of the weighted group-degree game, with the Owen value as
//! the uniform-weights special case.
//!
//! The game values a coalition by the summed node weights of its outside
//! neighbors, so the grand coalition is worth 0 and the solution splits
//! brokerage power rather than raw degree.

use crate::games::{CoalitionalWeights, GameError};
use crate::graph::{CommunityStructure, Graph, NodeId};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CommunityError {
    #[error("community structure covers {got} nodes, graph has {expected}")]
    WrongPartition { got: usize, expected: usize },
    #[error("node weight vector sized {got}, expected {expected}")]
    WrongWeights { got: usize, expected: usize },
    #[error(transparent)]
    Weights(#[from] GameError),
    #[error("binomial p must lie in [0, 1], got {0}")]
    BadProbability(f64),
}

/// Named two-level weight presets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightPreset {
    /// Uniform over community-coalition sizes and inner sizes.
    Owen,
    /// Binomial on both levels.
    OwenBanzhaf,
    /// Binomial across communities, uniform inside.
    SymmetricBanzhaf,
    /// `p^k (1-p)^(|M|-1-k)` across communities, uniform inside.
    PBinomial(f64),
}

/// Builds the two-level weight tables for `m` communities of the given
/// sizes.
pub fn preset_weights(
    preset: WeightPreset,
    m: usize,
    community_sizes: &[usize],
) -> Result<CoalitionalWeights, CommunityError> {
    assert_eq!(community_sizes.len(), m);
    let uniform = |len: usize| vec![1.0 / len as f64; len];
    let binomial = |len: usize| -> Vec<f64> {
        let mut row = Vec::with_capacity(len);
        let mut cur = 1.0f64;
        let scale = 0.5f64.powi(len as i32 - 1);
        for k in 0..len {
            row.push(cur * scale);
            cur = cur * (len - 1 - k) as f64 / (k + 1) as f64;
        }
        row
    };
    let (beta, alpha): (Vec<f64>, Vec<Vec<f64>>) = match preset {
        WeightPreset::Owen => (
            uniform(m),
            community_sizes.iter().map(|&s| uniform(s)).collect(),
        ),
        WeightPreset::OwenBanzhaf => (
            binomial(m),
            community_sizes.iter().map(|&s| binomial(s)).collect(),
        ),
        WeightPreset::SymmetricBanzhaf => (
            binomial(m),
            community_sizes.iter().map(|&s| uniform(s)).collect(),
        ),
        WeightPreset::PBinomial(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(CommunityError::BadProbability(p));
            }
            let mut beta = Vec::with_capacity(m);
            for k in 0..m {
                beta.push(p.powi(k as i32) * (1.0 - p).powi((m - 1 - k) as i32));
            }
            // Without the binomial counting factor the masses weight each
            // individual coalition; normalize the size table.
            let mut binom = 1.0f64;
            for (k, b) in beta.iter_mut().enumerate() {
                *b *= binom;
                binom = binom * (m - 1 - k) as f64 / (k + 1) as f64;
            }
            (beta, community_sizes.iter().map(|&s| uniform(s)).collect())
        }
    };
    Ok(CoalitionalWeights::new(beta, alpha)?)
}

/// Weighted group degree: the summed `f` weights of the coalition's
/// outside neighbors. Worth 0 on both the empty and the grand coalition.
pub fn weighted_group_degree(g: &Graph, f: &[f64], members: &[NodeId]) -> f64 {
    let n = g.node_count();
    let mut in_set = vec![false; n];
    for &v in members {
        in_set[v] = true;
    }
    let mut seen = vec![false; n];
    let mut total = 0.0;
    for &v in members {
        for &u in g.neighbors(v) {
            if !in_set[u] && !seen[u] {
                seen[u] = true;
                total += f[u];
            }
        }
    }
    total
}

struct CommunityDegrees {
    /// Distinct adjacent communities, own community excluded.
    inter: Vec<usize>,
    /// Neighbors inside the node's own community.
    intra: Vec<usize>,
}

/// In-edge degree counts: how a node can already be influenced. On
/// directed graphs influence arrives along arrows, so the counts walk
/// in-neighbors; undirected graphs see their plain neighbor lists.
fn community_degrees(g: &Graph, cs: &CommunityStructure) -> CommunityDegrees {
    let n = g.node_count();
    let mut inter = vec![0usize; n];
    let mut intra = vec![0usize; n];
    let mut seen = vec![usize::MAX; cs.community_count()];
    for v in 0..n {
        seen.fill(usize::MAX);
        let own = cs.community_of(v);
        for &u in g.in_neighbors(v) {
            let c = cs.community_of(u);
            if c == own {
                intra[v] += 1;
            } else if seen[c] != v {
                seen[c] = v;
                inter[v] += 1;
            }
        }
    }
    CommunityDegrees { inter, intra }
}

/// In-neighbors of `u` inside community `j`.
fn in_degree_within(g: &Graph, cs: &CommunityStructure, u: NodeId, j: usize) -> usize {
    g.in_neighbors(u)
        .iter()
        .filter(|&&w| cs.community_of(w) == j)
        .count()
}

fn check_inputs(g: &Graph, cs: &CommunityStructure, f: &[f64]) -> Result<(), CommunityError> {
    if cs.assignment().len() != g.node_count() {
        return Err(CommunityError::WrongPartition {
            got: cs.assignment().len(),
            expected: g.node_count(),
        });
    }
    if f.len() != g.node_count() {
        return Err(CommunityError::WrongWeights {
            got: f.len(),
            expected: g.node_count(),
        });
    }
    Ok(())
}

/// Coalitional semivalue of the weighted group-degree game under an
/// arbitrary two-level weight table. `O(|V|^3)` worst case after an
/// `O(|V| + |E|)` degree scan.
///
/// Binomials with a smaller top than bottom read as zero, and empty
/// ratios as zero, matching the defining conventions.
pub fn coalitional_semivalue_degree(
    g: &Graph,
    cs: &CommunityStructure,
    weights: &CoalitionalWeights,
    f: &[f64],
) -> Result<Vec<f64>, CommunityError> {
    check_inputs(g, cs, f)?;
    let m = cs.community_count();
    let sizes: Vec<usize> = (0..m).map(|c| cs.members(c).len()).collect();
    weights.check_sizes(m, &sizes)?;
    let degs = community_degrees(g, cs);
    let n = g.node_count();
    let max_dim = m.max(sizes.iter().copied().max().unwrap_or(0)) + 1;
    let binom = binomial_table(max_dim);
    let choose = |top: i64, bottom: usize| -> f64 {
        if top < 0 || (top as usize) < bottom {
            0.0
        } else {
            binom[top as usize][bottom]
        }
    };
    let mut phi = vec![0.0; n];
    for v in 0..n {
        let j = cs.community_of(v);
        let cj = sizes[j];
        let mut total = 0.0;
        for k in 0..m {
            let outer_total = choose((m - 1) as i64, k);
            for l in 0..cj {
                let inner_total = choose((cj - 1) as i64, l);
                let denom = outer_total * inner_total;
                if denom == 0.0 {
                    continue;
                }
                let mut mc = 0.0;
                for &u in g.neighbors(v) {
                    let top_outer = choose((m as i64) - 1 - degs.inter[u] as i64, k);
                    let top_inner = if cs.community_of(u) == j {
                        choose((cj as i64) - 1 - degs.intra[u] as i64, l)
                    } else {
                        // Count u's in-edges from v's community here,
                        // not from u's own.
                        let in_j = in_degree_within(g, cs, u, j);
                        choose((cj as i64) - in_j as i64, l)
                    };
                    mc += f[u] * top_outer * top_inner / denom;
                }
                mc -= f[v];
                mc += f[v]
                    * choose((m as i64) - 1 - degs.inter[v] as i64, k)
                    * choose((cj as i64) - 1 - degs.intra[v] as i64, l)
                    / denom;
                total += weights.beta[k] * weights.alpha[j][l] * mc;
            }
        }
        phi[v] = total;
    }
    Ok(phi)
}

/// Owen value of the weighted group-degree game in closed form,
/// `O(|V| + |E|)`: equal to [`coalitional_semivalue_degree`] with
/// uniform weights on both levels.
pub fn owen_degree(
    g: &Graph,
    cs: &CommunityStructure,
    f: &[f64],
) -> Result<Vec<f64>, CommunityError> {
    check_inputs(g, cs, f)?;
    let degs = community_degrees(g, cs);
    let n = g.node_count();
    let mut phi = vec![0.0; n];
    for v in 0..n {
        let j = cs.community_of(v);
        let mut total = 0.0;
        for &u in g.neighbors(v) {
            let inter_u = 1.0 + degs.inter[u] as f64;
            if cs.community_of(u) == j {
                total += f[u] / (inter_u * (1.0 + degs.intra[u] as f64));
            } else {
                let in_j = in_degree_within(g, cs, u, j) as f64;
                total += f[u] / (inter_u * in_j);
            }
        }
        // The self term uses the node's own community degrees.
        total += f[v] * (1.0 / ((1.0 + degs.inter[v] as f64) * (1.0 + degs.intra[v] as f64)) - 1.0);
        phi[v] = total;
    }
    Ok(phi)
}

fn binomial_table(size: usize) -> Vec<Vec<f64>> {
    let mut t = vec![vec![0.0; size + 1]; size + 1];
    for i in 0..=size {
        t[i][0] = 1.0;
        for k in 1..=i {
            t[i][k] = t[i - 1][k - 1] + t[i - 1][k];
        }
    }
    t
}

/// The game played between whole communities: each coalition of
/// communities is valued as the union coalition.
pub fn quotient_game_value(
    g: &Graph,
    cs: &CommunityStructure,
    f: &[f64],
    communities: &[usize],
) -> f64 {
    let members: Vec<NodeId> = communities
        .iter()
        .flat_map(|&c| cs.members(c).iter().copied())
        .collect();
    weighted_group_degree(g, f, &members)
}
