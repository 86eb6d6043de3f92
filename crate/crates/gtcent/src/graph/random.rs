//! Seeded random graph generators for simulations and tests.

use super::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn label(i: usize) -> String {
    format!("n{i}")
}

/// Scale-free graph by preferential attachment: nodes join one at a time
/// and connect to `k` distinct incumbents with probability proportional
/// to degree. Starts from a `(k + 1)`-clique, so the result is connected.
pub fn preferential_attachment(n: usize, k: usize, seed: u64) -> Graph {
    assert!(k >= 1 && n > k, "need n > k and k >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Graph::builder(false);
    // Endpoint pool: each node appears once per incident edge.
    let mut pool: Vec<usize> = Vec::new();
    for u in 0..=k {
        for v in (u + 1)..=k {
            b.edge_line(&label(u), &label(v), None, 0).unwrap();
            pool.push(u);
            pool.push(v);
        }
    }
    for v in (k + 1)..n {
        let mut targets: Vec<usize> = Vec::with_capacity(k);
        while targets.len() < k {
            let t = pool[rng.gen_range(0..pool.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            b.edge_line(&label(v), &label(t), None, 0).unwrap();
            pool.push(v);
            pool.push(t);
        }
    }
    b.build().unwrap()
}

/// Uniform random graph with `n` nodes and `m` distinct edges.
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    assert!(m <= n * (n - 1) / 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Graph::builder(false);
    for v in 0..n {
        b.node(&label(v));
    }
    let mut chosen = std::collections::HashSet::new();
    while chosen.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if chosen.insert(key) {
            b.edge_line(&label(key.0), &label(key.1), None, 0).unwrap();
        }
    }
    b.build().unwrap()
}

/// Connected random graph: a random spanning tree plus `extra` edges.
pub fn connected_gnm(n: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Graph::builder(false);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut chosen = std::collections::HashSet::new();
    for i in 1..n {
        let u = order[rng.gen_range(0..i)];
        let v = order[i];
        let key = (u.min(v), u.max(v));
        chosen.insert(key);
        b.edge_line(&label(key.0), &label(key.1), None, 0).unwrap();
    }
    let max_extra = n * (n - 1) / 2 - (n - 1);
    let mut remaining = extra.min(max_extra);
    while remaining > 0 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if chosen.insert(key) {
            b.edge_line(&label(key.0), &label(key.1), None, 0).unwrap();
            remaining -= 1;
        }
    }
    b.build().unwrap()
}

/// Random tree by attaching each new node to a uniformly picked incumbent.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Graph::builder(false);
    b.node(&label(0));
    for v in 1..n {
        let t = rng.gen_range(0..v);
        b.edge_line(&label(v), &label(t), None, 0).unwrap();
    }
    b.build().unwrap()
}

/// Reweights a graph with integer edge weights drawn from `lo..=hi`.
/// Integer-valued weights keep tie comparisons exact in floating point.
pub fn with_random_integer_weights(g: &Graph, lo: u32, hi: u32, seed: u64) -> Graph {
    assert!(lo >= 1 && lo <= hi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Graph::builder(g.is_directed());
    for v in 0..g.node_count() {
        b.node(g.label(v));
    }
    for (u, v, _) in g.edges() {
        let w = rng.gen_range(lo..=hi) as f64;
        b.edge_line(g.label(u), g.label(v), Some(w), 0).unwrap();
    }
    b.build().unwrap()
}

/// Complete graph with weights drawn uniformly from (0, 1).
pub fn complete_uniform_weights(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Graph::builder(false);
    for u in 0..n {
        for v in (u + 1)..n {
            let w: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            b.edge_line(&label(u), &label(v), Some(w), 0).unwrap();
        }
    }
    b.build().unwrap()
}
