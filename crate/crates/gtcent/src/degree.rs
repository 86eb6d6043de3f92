//! Shapley-value degree and closeness centralities: the five influence
//! games with closed-form (or closely approximated) solutions.
//!
//! * `g1` - a coalition influences itself plus its immediate neighbors.
//! * `g2` - a node outside the coalition is influenced only when at least
//!   `k(v)` of its neighbors are members.
//! * `g3` - influence reaches every node within a per-node distance
//!   cutoff on a weighted graph.
//! * `g4` - influence decays with distance through an arbitrary
//!   non-increasing function.
//! * `g5` - a node is influenced when the incident member edge weights
//!   sum past a per-node threshold.

use crate::graph::{sssp, DistanceMode, Graph, NodeId};
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DegreeGameError {
    #[error("threshold k({node}) = {k} outside 1..=1+deg = {max}")]
    ThresholdOutOfRange { node: usize, k: u32, max: u32 },
    #[error("cutoff for node {node} must be strictly positive")]
    NonPositiveCutoff { node: usize },
    #[error("this game requires a weighted graph")]
    WeightedGraphRequired,
    #[error("directed graphs are not supported by this game")]
    DirectedUnsupported,
    #[error("parameter vector sized {got}, expected one entry per node ({expected})")]
    WrongArity { got: usize, expected: usize },
}

/// Distance-decay shapes accepted by the `g4` solver and the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceDecay {
    /// `1 / (1 + d)`
    Inverse,
    /// `1 / (1 + d^2)`
    InverseSquare,
    /// `e^-d`
    Exponential,
    /// `1` up to the cutoff, `0` beyond.
    Step(f64),
    /// Constant `c` at every distance.
    Constant(f64),
}

impl DistanceDecay {
    pub fn eval(&self, d: f64) -> f64 {
        match *self {
            DistanceDecay::Inverse => 1.0 / (1.0 + d),
            DistanceDecay::InverseSquare => 1.0 / (1.0 + d * d),
            DistanceDecay::Exponential => (-d).exp(),
            DistanceDecay::Step(cutoff) => {
                if d <= cutoff {
                    1.0
                } else {
                    0.0
                }
            }
            DistanceDecay::Constant(c) => c,
        }
    }
}

/// Which influence game a coalition value refers to.
#[derive(Debug, Clone)]
pub enum DegreeGameSpec {
    G1,
    G2 { thresholds: Vec<u32> },
    G3 { cutoffs: Vec<f64> },
    G4 { decay: DistanceDecay },
    G5 { cutoffs: Vec<f64> },
}

impl DegreeGameSpec {
    pub fn validate(&self, g: &Graph) -> Result<(), DegreeGameError> {
        let n = g.node_count();
        match self {
            DegreeGameSpec::G1 => Ok(()),
            DegreeGameSpec::G2 { thresholds } => {
                check_arity(thresholds.len(), n)?;
                for (v, &k) in thresholds.iter().enumerate() {
                    let max = 1 + g.in_degree(v) as u32;
                    if k < 1 || k > max {
                        return Err(DegreeGameError::ThresholdOutOfRange { node: v, k, max });
                    }
                }
                Ok(())
            }
            DegreeGameSpec::G3 { cutoffs } | DegreeGameSpec::G5 { cutoffs } => {
                require_weighted_undirected(g)?;
                check_arity(cutoffs.len(), n)?;
                for (v, &c) in cutoffs.iter().enumerate() {
                    if !(c > 0.0) {
                        return Err(DegreeGameError::NonPositiveCutoff { node: v });
                    }
                }
                Ok(())
            }
            DegreeGameSpec::G4 { .. } => require_weighted_undirected(g),
        }
    }
}

fn check_arity(got: usize, expected: usize) -> Result<(), DegreeGameError> {
    if got == expected {
        Ok(())
    } else {
        Err(DegreeGameError::WrongArity { got, expected })
    }
}

fn require_weighted_undirected(g: &Graph) -> Result<(), DegreeGameError> {
    if !g.is_weighted() {
        return Err(DegreeGameError::WeightedGraphRequired);
    }
    if g.is_directed() {
        return Err(DegreeGameError::DirectedUnsupported);
    }
    Ok(())
}

/// Shortest distance from any member of `set` to each node.
///
/// Heap keys are the bit patterns of the distances; nonnegative floats
/// order correctly that way.
fn multi_source_distances(g: &Graph, set: &[NodeId]) -> Vec<f64> {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut heap = std::collections::BinaryHeap::new();
    for &s in set {
        dist[s] = 0.0;
        heap.push(std::cmp::Reverse((0f64.to_bits(), s)));
    }
    while let Some(std::cmp::Reverse((bits, v))) = heap.pop() {
        let d = f64::from_bits(bits);
        if d > dist[v] {
            continue;
        }
        for (w, lambda) in g.weighted_neighbors(v) {
            let cand = d + lambda;
            if cand < dist[w] {
                dist[w] = cand;
                heap.push(std::cmp::Reverse((cand.to_bits(), w)));
            }
        }
    }
    dist
}

/// The characteristic function of each game, evaluated directly on a
/// node set. Empty coalitions are worth 0 in every game.
pub fn nu_degree_game(
    g: &Graph,
    spec: &DegreeGameSpec,
    members: &[NodeId],
) -> Result<f64, DegreeGameError> {
    spec.validate(g)?;
    if members.is_empty() {
        return Ok(0.0);
    }
    let n = g.node_count();
    let mut in_set = vec![false; n];
    for &v in members {
        in_set[v] = true;
    }
    Ok(match spec {
        DegreeGameSpec::G1 => {
            let mut counted = vec![false; n];
            let mut total = 0usize;
            for &v in members {
                for u in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
                    if !counted[u] {
                        counted[u] = true;
                        total += 1;
                    }
                }
            }
            total as f64
        }
        DegreeGameSpec::G2 { thresholds } => {
            let mut total = 0usize;
            for u in 0..n {
                if in_set[u] {
                    total += 1;
                    continue;
                }
                let member_edges = g.in_neighbors(u).iter().filter(|&&w| in_set[w]).count() as u32;
                if member_edges >= thresholds[u] {
                    total += 1;
                }
            }
            total as f64
        }
        DegreeGameSpec::G3 { cutoffs } => {
            let dist = multi_source_distances(g, members);
            (0..n).filter(|&u| dist[u] <= cutoffs[u]).count() as f64
        }
        DegreeGameSpec::G4 { decay } => {
            let dist = multi_source_distances(g, members);
            (0..n)
                .filter(|&u| dist[u].is_finite())
                .map(|u| decay.eval(dist[u]))
                .sum()
        }
        DegreeGameSpec::G5 { cutoffs } => {
            let mut total = 0usize;
            for u in 0..n {
                if in_set[u] {
                    total += 1;
                    continue;
                }
                let member_weight: f64 = g
                    .weighted_in_neighbors(u)
                    .filter(|&(w, _)| in_set[w])
                    .map(|(_, lambda)| lambda)
                    .sum();
                if member_weight >= cutoffs[u] {
                    total += 1;
                }
            }
            total as f64
        }
    })
}

/// Exact Shapley value of the sphere-of-influence game `g1` in
/// `O(|V| + |E|)`. Directed graphs use in-degrees.
pub fn sv_g1(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    (0..n)
        .map(|v| {
            let mut phi = 1.0 / (1.0 + g.in_degree(v) as f64);
            for &u in g.neighbors(v) {
                phi += 1.0 / (1.0 + g.in_degree(u) as f64);
            }
            phi
        })
        .collect()
}

/// Exact Shapley value of the threshold game `g2` with per-node
/// thresholds, in `O(|V| + |E|)`.
pub fn sv_g2(g: &Graph, thresholds: &[u32]) -> Result<Vec<f64>, DegreeGameError> {
    DegreeGameSpec::G2 {
        thresholds: thresholds.to_vec(),
    }
    .validate(g)?;
    let n = g.node_count();
    Ok((0..n)
        .map(|v| {
            let deg_v = g.in_degree(v) as f64;
            let mut phi = (thresholds[v] as f64 / (1.0 + deg_v)).min(1.0);
            for &u in g.neighbors(v) {
                let deg_u = g.in_degree(u) as f64;
                let k_u = thresholds[u] as f64;
                phi += ((deg_u - k_u + 1.0) / (deg_u * (1.0 + deg_u))).max(0.0);
            }
            phi
        })
        .collect())
}

/// Exact Shapley value of the cutoff-distance game `g3` with per-node
/// cutoffs, in `O(|V||E| + |V|^2 log |V|)`.
pub fn sv_g3(g: &Graph, cutoffs: &[f64]) -> Result<Vec<f64>, DegreeGameError> {
    DegreeGameSpec::G3 {
        cutoffs: cutoffs.to_vec(),
    }
    .validate(g)?;
    let n = g.node_count();
    // Per source u: everything within cutoff(u) shares 1/(1 + extDegree(u)).
    let partials: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let sp = sssp(g, u, DistanceMode::Weighted);
            let ext_degree = (0..n)
                .filter(|&w| w != u && sp.dist[w] <= cutoffs[u])
                .count() as f64;
            let share = 1.0 / (1.0 + ext_degree);
            let mut part = vec![0.0; n];
            for v in 0..n {
                if sp.dist[v] <= cutoffs[u] {
                    part[v] += share;
                }
            }
            part
        })
        .collect();
    Ok(sum_in_order(partials, n))
}

/// Exact Shapley value of the distance-decay game `g4` via the
/// sorted-distance backward sweep, in `O(|V||E| + |V|^2 log |V|)`.
///
/// `decay` must be non-increasing, positive and defined at 0; nodes tied
/// at the same distance share one value.
pub fn sv_g4<F>(g: &Graph, decay: F) -> Result<Vec<f64>, DegreeGameError>
where
    F: Fn(f64) -> f64 + Sync,
{
    require_weighted_undirected(g)?;
    let n = g.node_count();
    let partials: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let sp = sssp(g, u, DistanceMode::Weighted);
            let mut others: Vec<(f64, NodeId)> = (0..n)
                .filter(|&w| w != u)
                .map(|w| (sp.dist[w], w))
                .collect();
            others.sort_unstable_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
            let mut part = vec![0.0; n];
            let mut sum = 0.0;
            let mut prev_distance = f64::NAN;
            let mut prev_value = 0.0;
            // Positions are 1-based among the n-1 other nodes; sweep from
            // the farthest down. Unreachable nodes contribute f = 0.
            for index in (1..n).rev() {
                let (d, node) = others[index - 1];
                let f_d = if d.is_finite() { decay(d) } else { 0.0 };
                let value = if d == prev_distance {
                    prev_value
                } else {
                    f_d / (1.0 + index as f64) - sum
                };
                part[node] += value;
                sum += f_d / (index as f64 * (1.0 + index as f64));
                prev_distance = d;
                prev_value = value;
            }
            part[u] += decay(0.0) - sum;
            part
        })
        .collect();
    Ok(sum_in_order(partials, n))
}

/// Default degree below which the weighted-threshold game's per-node
/// subset-sum distributions are enumerated exactly instead of using the
/// normal approximation.
pub const G5_EXACT_DEGREE_LIMIT: usize = 20;

/// Approximate Shapley value of the weighted-threshold game `g5` in
/// `O(|V||E|)`, treating the member-weight sum seen by each node as
/// normal with exact sampling-without-replacement moments. Nodes of
/// degree at most [`G5_EXACT_DEGREE_LIMIT`] get their subset-sum
/// distribution enumerated exactly.
pub fn sv_g5_approx(g: &Graph, cutoffs: &[f64]) -> Result<Vec<f64>, DegreeGameError> {
    sv_g5_approx_with(g, cutoffs, G5_EXACT_DEGREE_LIMIT)
}

pub fn sv_g5_approx_with(
    g: &Graph,
    cutoffs: &[f64],
    exact_degree_limit: usize,
) -> Result<Vec<f64>, DegreeGameError> {
    DegreeGameSpec::G5 {
        cutoffs: cutoffs.to_vec(),
    }
    .validate(g)?;
    let n = g.node_count();
    let mut phi = vec![0.0; n];
    for v in 0..n {
        let own: Vec<f64> = g.weighted_neighbors(v).map(|(_, w)| w).collect();
        let deg_v = own.len();
        // Contribution through v itself: v counts as a member unless the
        // m earlier-arriving neighbors already influenced it.
        let self_share = 1.0 / (1.0 + deg_v as f64);
        if deg_v <= exact_degree_limit {
            let below = exact_below_counts(&own, cutoffs[v]);
            for p in below {
                phi[v] += p * self_share;
            }
        } else {
            for m in 0..=deg_v {
                let p = normal_below(&own, m, cutoffs[v]);
                phi[v] += p * self_share;
            }
        }
        // Contribution through each neighbor u: v's edge pushes u past
        // its threshold exactly when the earlier member weight lies in
        // [cutoff(u) - lambda(v,u), cutoff(u)).
        for (u, lambda_vu) in g.weighted_neighbors(v) {
            let deg_u = g.degree(u);
            let rest: Vec<f64> = g
                .weighted_neighbors(u)
                .filter(|&(w, _)| w != v)
                .map(|(_, w)| w)
                .collect();
            let lower = cutoffs[u] - lambda_vu;
            let upper = cutoffs[u];
            let mut p = 0.0;
            if deg_u <= exact_degree_limit {
                let windows = exact_window_counts(&rest, lower, upper);
                for (m, z) in windows.into_iter().enumerate() {
                    p += z * (deg_u - m) as f64 / (deg_u as f64 * (deg_u as f64 + 1.0));
                }
            } else {
                for m in 0..deg_u {
                    let z = normal_window(&rest, m, lower, upper);
                    p += z * (deg_u - m) as f64 / (deg_u as f64 * (deg_u as f64 + 1.0));
                }
            }
            phi[v] += p;
        }
    }
    Ok(phi)
}

/// Per-size probabilities that a uniform m-subset of `weights` sums below
/// `cutoff`, for m = 0..=len.
fn exact_below_counts(weights: &[f64], cutoff: f64) -> Vec<f64> {
    let n = weights.len();
    let mut hits = vec![0.0f64; n + 1];
    let mut totals = vec![0.0f64; n + 1];
    for mask in 0..(1usize << n) {
        let m = mask.count_ones() as usize;
        let sum: f64 = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| weights[i])
            .sum();
        totals[m] += 1.0;
        if sum < cutoff {
            hits[m] += 1.0;
        }
    }
    hits.iter().zip(&totals).map(|(h, t)| h / t).collect()
}

/// Per-size probabilities that a uniform m-subset sum lands in
/// `[lower, upper)`, for m = 0..=len.
fn exact_window_counts(weights: &[f64], lower: f64, upper: f64) -> Vec<f64> {
    let n = weights.len();
    let mut hits = vec![0.0f64; n + 1];
    let mut totals = vec![0.0f64; n + 1];
    for mask in 0..(1usize << n) {
        let m = mask.count_ones() as usize;
        let sum: f64 = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| weights[i])
            .sum();
        totals[m] += 1.0;
        if sum >= lower && sum < upper {
            hits[m] += 1.0;
        }
    }
    hits.iter().zip(&totals).map(|(h, t)| h / t).collect()
}

/// Sampling-without-replacement moments of an m-subset sum: mean
/// `m * mean(w)`, variance `m * var(w) * (N - m)/(N - 1)`.
fn subset_sum_moments(weights: &[f64], m: usize) -> (f64, f64) {
    let n = weights.len();
    if n == 0 || m == 0 {
        return (0.0, 0.0);
    }
    let alpha: f64 = weights.iter().sum();
    let beta: f64 = weights.iter().map(|w| w * w).sum();
    let mean_w = alpha / n as f64;
    let var_w = (beta / n as f64 - mean_w * mean_w).max(0.0);
    let mean = m as f64 * mean_w;
    let var = if n > 1 {
        m as f64 * var_w * (n - m) as f64 / (n - 1) as f64
    } else {
        0.0
    };
    (mean, var)
}

fn normal_below(weights: &[f64], m: usize, cutoff: f64) -> f64 {
    let (mu, var) = subset_sum_moments(weights, m);
    if var <= 0.0 {
        return if mu < cutoff { 1.0 } else { 0.0 };
    }
    let normal = Normal::new(mu, var.sqrt()).expect("positive sigma");
    normal.cdf(cutoff)
}

fn normal_window(weights: &[f64], m: usize, lower: f64, upper: f64) -> f64 {
    let (mu, var) = subset_sum_moments(weights, m);
    if var <= 0.0 {
        return if mu >= lower && mu < upper { 1.0 } else { 0.0 };
    }
    let normal = Normal::new(mu, var.sqrt()).expect("positive sigma");
    (normal.cdf(upper) - normal.cdf(lower)).max(0.0)
}

fn sum_in_order(partials: Vec<Vec<f64>>, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for part in partials {
        for (o, p) in out.iter_mut().zip(part) {
            *o += p;
        }
    }
    out
}
