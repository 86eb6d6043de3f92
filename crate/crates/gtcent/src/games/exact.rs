//! Exhaustive solvers for every solution concept in the crate. These are
//! the ground truth the fast algorithms are tested against, so they stay
//! as close to the defining sums as possible.

use super::{
    Coalition, CoalitionGame, CoalitionalWeights, GameError, OrderedGame, SemivalueWeights,
};

/// Ceiling for subset-enumerating oracles (override with `_with_limit`).
pub const DEFAULT_SUBSET_LIMIT: usize = 12;
/// Ceiling for permutation-enumerating (ordered) oracles.
pub const DEFAULT_ORDERED_LIMIT: usize = 8;

/// Values of every coalition, indexed by bitmask.
pub fn value_table<G: CoalitionGame + ?Sized>(game: &G) -> Vec<f64> {
    let n = game.player_count();
    let mut table = vec![0.0; 1usize << n];
    for (mask, slot) in table.iter_mut().enumerate().skip(1) {
        *slot = game.value(Coalition(mask as u64));
    }
    table
}

/// Shapley permutation weights `k!(n-k-1)!/n!` for `k = 0..n`, built as a
/// running product so no factorial is ever materialized.
pub(crate) fn shapley_subset_weights(n: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(n);
    let mut cur = 1.0 / n as f64;
    for k in 0..n {
        w.push(cur);
        if k + 1 < n {
            cur = cur * (k + 1) as f64 / (n - k - 1) as f64;
        }
    }
    w
}

/// Binomial coefficients `C(n, 0..=n)` as floats.
pub(crate) fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(n + 1);
    let mut cur = 1.0f64;
    for k in 0..=n {
        row.push(cur);
        cur = cur * (n - k) as f64 / (k + 1) as f64;
    }
    row
}

fn check_limit(concept: &'static str, players: usize, limit: usize) -> Result<(), GameError> {
    if players > limit {
        Err(GameError::TooManyPlayers {
            concept,
            limit,
            got: players,
        })
    } else {
        Ok(())
    }
}

/// Exact Shapley value by direct evaluation of the defining subset sum.
pub fn shapley_oracle<G: CoalitionGame + ?Sized>(game: &G) -> Result<Vec<f64>, GameError> {
    shapley_oracle_with_limit(game, DEFAULT_SUBSET_LIMIT)
}

pub fn shapley_oracle_with_limit<G: CoalitionGame + ?Sized>(
    game: &G,
    limit: usize,
) -> Result<Vec<f64>, GameError> {
    let n = game.player_count();
    check_limit("Shapley", n, limit)?;
    let table = value_table(game);
    let w = shapley_subset_weights(n);
    let mut phi = vec![0.0; n];
    for mask in 0..(1usize << n) {
        let c = Coalition(mask as u64);
        let k = c.len();
        let base = table[mask];
        for i in 0..n {
            if !c.contains(i) {
                phi[i] += w[k] * (table[mask | (1 << i)] - base);
            }
        }
    }
    Ok(phi)
}

/// Exact Semivalue: expected marginal contribution to a random coalition
/// of each size, mixed by `beta`.
pub fn semivalue_oracle<G: CoalitionGame + ?Sized>(
    game: &G,
    weights: &SemivalueWeights,
) -> Result<Vec<f64>, GameError> {
    semivalue_oracle_with_limit(game, weights, DEFAULT_SUBSET_LIMIT)
}

pub fn semivalue_oracle_with_limit<G: CoalitionGame + ?Sized>(
    game: &G,
    weights: &SemivalueWeights,
    limit: usize,
) -> Result<Vec<f64>, GameError> {
    let n = game.player_count();
    check_limit("Semivalue", n, limit)?;
    if weights.arity() != n {
        return Err(GameError::WrongWeightArity {
            got: weights.arity(),
            expected: n,
        });
    }
    let table = value_table(game);
    // beta(k) spread uniformly over the C(n-1, k) coalitions of size k.
    let choose = binomial_row(n - 1);
    let per_set: Vec<f64> = (0..n).map(|k| weights.beta(k) / choose[k]).collect();
    let mut phi = vec![0.0; n];
    for mask in 0..(1usize << n) {
        let c = Coalition(mask as u64);
        let k = c.len();
        if k >= n {
            continue;
        }
        let base = table[mask];
        for i in 0..n {
            if !c.contains(i) {
                phi[i] += per_set[k] * (table[mask | (1 << i)] - base);
            }
        }
    }
    Ok(phi)
}

fn check_partition(n: usize, partition: &[Vec<usize>]) -> Result<(), GameError> {
    let mut seen = vec![false; n];
    for community in partition {
        for &v in community {
            if v >= n || seen[v] {
                return Err(GameError::BadPartition);
            }
            seen[v] = true;
        }
    }
    if seen.iter().all(|&s| s) && partition.iter().all(|c| !c.is_empty()) {
        Ok(())
    } else {
        Err(GameError::BadPartition)
    }
}

/// Exact Owen value for a game with an a-priori partition of the players.
pub fn owen_oracle<G: CoalitionGame + ?Sized>(
    game: &G,
    partition: &[Vec<usize>],
) -> Result<Vec<f64>, GameError> {
    owen_oracle_with_limit(game, partition, 20)
}

pub fn owen_oracle_with_limit<G: CoalitionGame + ?Sized>(
    game: &G,
    partition: &[Vec<usize>],
    community_limit: usize,
) -> Result<Vec<f64>, GameError> {
    let m = partition.len();
    check_limit("Owen", m, DEFAULT_SUBSET_LIMIT)?;
    let max_c = partition.iter().map(Vec::len).max().unwrap_or(0);
    check_limit("Owen", max_c, community_limit)?;
    // The Owen value is the coalitional semivalue with uniform two-level
    // weights.
    let beta = vec![1.0 / m as f64; m];
    let alpha = partition
        .iter()
        .map(|c| vec![1.0 / c.len() as f64; c.len()])
        .collect();
    let weights = CoalitionalWeights::new(beta, alpha)?;
    coalitional_semivalue_inner(game, partition, &weights)
}

/// Exact coalitional semivalue: the double sum over coalitions of whole
/// communities and within-community coalitions.
pub fn coalitional_semivalue_oracle<G: CoalitionGame + ?Sized>(
    game: &G,
    partition: &[Vec<usize>],
    weights: &CoalitionalWeights,
) -> Result<Vec<f64>, GameError> {
    coalitional_semivalue_oracle_with_limit(game, partition, weights, 20)
}

pub fn coalitional_semivalue_oracle_with_limit<G: CoalitionGame + ?Sized>(
    game: &G,
    partition: &[Vec<usize>],
    weights: &CoalitionalWeights,
    community_limit: usize,
) -> Result<Vec<f64>, GameError> {
    let m = partition.len();
    check_limit("coalitional semivalue", m, DEFAULT_SUBSET_LIMIT)?;
    let max_c = partition.iter().map(Vec::len).max().unwrap_or(0);
    check_limit("coalitional semivalue", max_c, community_limit)?;
    coalitional_semivalue_inner(game, partition, weights)
}

fn coalitional_semivalue_inner<G: CoalitionGame + ?Sized>(
    game: &G,
    partition: &[Vec<usize>],
    weights: &CoalitionalWeights,
) -> Result<Vec<f64>, GameError> {
    let n = game.player_count();
    check_partition(n, partition)?;
    let m = partition.len();
    let sizes: Vec<usize> = partition.iter().map(Vec::len).collect();
    weights.check_sizes(m, &sizes)?;
    let community_masks: Vec<Coalition> = partition
        .iter()
        .map(|c| Coalition::from_members(c))
        .collect();
    let mut phi = vec![0.0; n];
    for (j, community) in partition.iter().enumerate() {
        let others: Vec<usize> = (0..m).filter(|&r| r != j).collect();
        // beta(k) spread over the C(m-1, k) community coalitions of size k,
        // alpha_j(l) over the C(|C_j|-1, l) inner coalitions of size l.
        let outer_choose = binomial_row(m - 1);
        let inner_choose = binomial_row(community.len() - 1);
        let outer_w: Vec<f64> = (0..m).map(|k| weights.beta[k] / outer_choose[k]).collect();
        let inner_w: Vec<f64> = (0..community.len())
            .map(|l| weights.alpha[j][l] / inner_choose[l])
            .collect();
        for &i in community {
            let fellows: Vec<usize> = community.iter().copied().filter(|&v| v != i).collect();
            for r_mask in 0..(1usize << others.len()) {
                let mut outer = Coalition::EMPTY;
                let mut k = 0usize;
                for (bit, &r) in others.iter().enumerate() {
                    if r_mask >> bit & 1 == 1 {
                        outer = Coalition(outer.0 | community_masks[r].0);
                        k += 1;
                    }
                }
                for c_mask in 0..(1usize << fellows.len()) {
                    let mut inner = outer;
                    let mut l = 0usize;
                    for (bit, &v) in fellows.iter().enumerate() {
                        if c_mask >> bit & 1 == 1 {
                            inner = inner.with(v);
                            l += 1;
                        }
                    }
                    let mc = game.value(inner.with(i)) - game.value(inner);
                    phi[i] += outer_w[k] * inner_w[l] * mc;
                }
            }
        }
    }
    Ok(phi)
}

/// Visits every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut items: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Exact solution concept for ordered games where a player's marginal
/// contribution is taken when joining last.
pub fn nr_oracle<G: OrderedGame + ?Sized>(game: &G) -> Result<Vec<f64>, GameError> {
    nr_oracle_with_limit(game, DEFAULT_ORDERED_LIMIT)
}

pub fn nr_oracle_with_limit<G: OrderedGame + ?Sized>(
    game: &G,
    limit: usize,
) -> Result<Vec<f64>, GameError> {
    let n = game.player_count();
    check_limit("ordered (last-position)", n, limit)?;
    let mut phi = vec![0.0; n];
    for_each_permutation(n, |perm| {
        let mut prev = 0.0;
        for t in 0..n {
            let val = game.value(&perm[..=t]);
            phi[perm[t]] += val - prev;
            prev = val;
        }
    });
    let total = factorial(n);
    for p in &mut phi {
        *p /= total;
    }
    Ok(phi)
}

/// Exact solution concept for ordered games where the marginal
/// contribution averages over every insertion position.
pub fn sb_oracle<G: OrderedGame + ?Sized>(game: &G) -> Result<Vec<f64>, GameError> {
    sb_oracle_with_limit(game, DEFAULT_ORDERED_LIMIT)
}

pub fn sb_oracle_with_limit<G: OrderedGame + ?Sized>(
    game: &G,
    limit: usize,
) -> Result<Vec<f64>, GameError> {
    let n = game.player_count();
    check_limit("ordered (insertion-averaged)", n, limit)?;
    let mut phi = vec![0.0; n];
    let mut inserted = Vec::with_capacity(n);
    for_each_permutation(n, |perm| {
        for t in 0..n {
            let prefix = &perm[..t];
            let player = perm[t];
            let base = game.value(prefix);
            let mut avg = 0.0;
            for l in 0..=t {
                inserted.clear();
                inserted.extend_from_slice(&prefix[..l]);
                inserted.push(player);
                inserted.extend_from_slice(&prefix[l..]);
                avg += game.value(&inserted) - base;
            }
            phi[player] += avg / (t + 1) as f64;
        }
    });
    let total = factorial(n);
    for p in &mut phi {
        *p /= total;
    }
    Ok(phi)
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).map(|x| x as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{coalition_game, ordered_game};

    /// Three players collect from trees with ladders of heights 20/40/20;
    /// two equal ladders stack to reach height 60.
    fn apples_game() -> impl CoalitionGame {
        coalition_game(3, |c| {
            if c.len() == 3 {
                600.0
            } else {
                let heights = [20.0, 40.0, 20.0];
                c.members().map(|i| heights[i] * 10.0).fold(0.0, f64::max)
            }
        })
    }

    #[test]
    fn apples_game_shapley() {
        let phi = shapley_oracle(&apples_game()).unwrap();
        let third = 1.0 / 3.0;
        assert!((phi[0] - (133.0 + third)).abs() < 1e-9);
        assert!((phi[1] - (333.0 + third)).abs() < 1e-9);
        assert!((phi[2] - (133.0 + third)).abs() < 1e-9);
    }

    #[test]
    fn unit_connectivity_game_on_p3() {
        // Value 1 for sets inducing a connected subgraph of a-b-c.
        let game = coalition_game(3, |c| {
            // Only {a, c} is disconnected on the path.
            if c.0 == 0b101 {
                0.0
            } else {
                1.0
            }
        });
        let phi = shapley_oracle(&game).unwrap();
        assert!((phi[0] - 1.0 / 6.0).abs() < 1e-12);
        assert!((phi[1] - 2.0 / 3.0).abs() < 1e-12);
        assert!((phi[2] - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn uniform_semivalue_is_shapley() {
        let game = apples_game();
        let sv = shapley_oracle(&game).unwrap();
        let semi = semivalue_oracle(&game, &SemivalueWeights::shapley(3)).unwrap();
        for (a, b) in sv.iter().zip(&semi) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn owen_with_one_community_degenerates_to_shapley() {
        let game = apples_game();
        let sv = shapley_oracle(&game).unwrap();
        let owen = owen_oracle(&game, &[vec![0, 1, 2]]).unwrap();
        for (a, b) in sv.iter().zip(&owen) {
            assert!((a - b).abs() < 1e-9);
        }
        let owen_singletons = owen_oracle(&game, &[vec![0], vec![1], vec![2]]).unwrap();
        for (a, b) in sv.iter().zip(&owen_singletons) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn indicator_ordered_game_splits_as_expected() {
        // Value 1 only for the exact order (0, 1, 2): the last-position
        // concept rewards the closer, the averaged one splits evenly.
        let target = [0usize, 1, 2];
        let game = ordered_game(3, move |t| if t == target { 1.0 } else { 0.0 });
        let nr = nr_oracle(&game).unwrap();
        assert!((nr[2] - 1.0 / 6.0).abs() < 1e-12);
        assert!(nr[0].abs() < 1e-12 && nr[1].abs() < 1e-12);
        let sb = sb_oracle(&game).unwrap();
        for &x in &sb {
            assert!((x - 1.0 / 18.0).abs() < 1e-12);
        }
    }

    #[test]
    fn order_independent_games_collapse_to_shapley() {
        let set_game = apples_game();
        let ordered = ordered_game(3, |t| {
            let c = Coalition::from_members(t);
            apples_game().value(c)
        });
        let sv = shapley_oracle(&set_game).unwrap();
        let nr = nr_oracle(&ordered).unwrap();
        let sb = sb_oracle(&ordered).unwrap();
        for i in 0..3 {
            assert!((sv[i] - nr[i]).abs() < 1e-9);
            assert!((sv[i] - sb[i]).abs() < 1e-9);
        }
    }

    #[test]
    fn shapley_is_efficient_on_random_games() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(14);
        for _ in 0..20 {
            let n = rng.gen_range(3..=9usize);
            let table: Vec<f64> = (0..(1usize << n))
                .map(|m| {
                    if m == 0 {
                        0.0
                    } else {
                        rng.gen_range(-5.0..5.0)
                    }
                })
                .collect();
            let game = coalition_game(n, |c: Coalition| table[c.0 as usize]);
            let phi = shapley_oracle(&game).unwrap();
            let grand = table[(1usize << n) - 1];
            assert!((phi.iter().sum::<f64>() - grand).abs() < 1e-9);
        }
    }

    #[test]
    fn limits_are_enforced_and_overridable() {
        let game = coalition_game(13, |c| c.len() as f64);
        assert!(shapley_oracle(&game).is_err());
        let phi = shapley_oracle_with_limit(&game, 13).unwrap();
        for &x in &phi {
            assert!((x - 1.0).abs() < 1e-9);
        }
    }
}
