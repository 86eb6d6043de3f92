//! Cooperative-game abstractions: coalitions, characteristic functions,
//! solution-concept weights, exhaustive oracles and Monte Carlo samplers.

mod exact;
mod monte_carlo;

pub(crate) use exact::shapley_subset_weights;
pub use exact::{
    coalitional_semivalue_oracle, coalitional_semivalue_oracle_with_limit, for_each_permutation,
    nr_oracle, nr_oracle_with_limit, owen_oracle, owen_oracle_with_limit, sb_oracle,
    sb_oracle_with_limit, semivalue_oracle, semivalue_oracle_with_limit, shapley_oracle,
    shapley_oracle_with_limit, value_table, DEFAULT_ORDERED_LIMIT, DEFAULT_SUBSET_LIMIT,
};
pub use monte_carlo::{monte_carlo_degree_shapley, monte_carlo_shapley, DegreeContributionBlock};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GameError {
    #[error("{concept} oracle supports at most {limit} players (got {got}); raise the limit explicitly to override")]
    TooManyPlayers {
        concept: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("weights must be a probability distribution (sum {sum})")]
    NotADistribution { sum: f64 },
    #[error("weight table sized {got}, expected {expected}")]
    WrongWeightArity { got: usize, expected: usize },
    #[error("iteration count must be at least 1")]
    NoIterations,
    #[error("partition does not cover every player exactly once")]
    BadPartition,
}

/// A coalition as a bitmask over player indices; supports up to 64 players.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Coalition(pub u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn full(n: usize) -> Coalition {
        debug_assert!(n <= 64);
        if n == 64 {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn from_members(members: &[usize]) -> Coalition {
        Coalition(members.iter().fold(0u64, |m, &v| m | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Coalition {
        Coalition(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Coalition {
        Coalition(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> MemberIter {
        MemberIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.members().collect()
    }
}

pub struct MemberIter(u64);

impl Iterator for MemberIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A coalitional game: a value for every subset of players, with
/// `value(EMPTY) = 0`.
pub trait CoalitionGame {
    fn player_count(&self) -> usize;
    fn value(&self, coalition: Coalition) -> f64;
}

/// A game over ordered coalitions (sequences of distinct players), with
/// `value(()) = 0`.
pub trait OrderedGame {
    fn player_count(&self) -> usize;
    fn value(&self, sequence: &[usize]) -> f64;
}

/// Wraps a closure as a [`CoalitionGame`].
pub struct FnGame<F: Fn(Coalition) -> f64> {
    n: usize,
    f: F,
}

pub fn coalition_game<F: Fn(Coalition) -> f64>(n: usize, f: F) -> FnGame<F> {
    FnGame { n, f }
}

impl<F: Fn(Coalition) -> f64> CoalitionGame for FnGame<F> {
    fn player_count(&self) -> usize {
        self.n
    }

    fn value(&self, coalition: Coalition) -> f64 {
        if coalition.is_empty() {
            0.0
        } else {
            (self.f)(coalition)
        }
    }
}

/// Wraps a closure as an [`OrderedGame`].
pub struct FnOrderedGame<F: Fn(&[usize]) -> f64> {
    n: usize,
    f: F,
}

pub fn ordered_game<F: Fn(&[usize]) -> f64>(n: usize, f: F) -> FnOrderedGame<F> {
    FnOrderedGame { n, f }
}

impl<F: Fn(&[usize]) -> f64> OrderedGame for FnOrderedGame<F> {
    fn player_count(&self) -> usize {
        self.n
    }

    fn value(&self, sequence: &[usize]) -> f64 {
        if sequence.is_empty() {
            0.0
        } else {
            (self.f)(sequence)
        }
    }
}

/// Size-indexed Semivalue weights: `beta[k]` is the probability that a
/// player joins a coalition of size `k`, for `k` in `0..n-1`.
#[derive(Debug, Clone)]
pub struct SemivalueWeights {
    beta: Vec<f64>,
}

impl SemivalueWeights {
    pub fn new(beta: Vec<f64>) -> Result<Self, GameError> {
        let sum: f64 = beta.iter().sum();
        if beta.iter().any(|&b| b < 0.0) || (sum - 1.0).abs() > 1e-12 {
            return Err(GameError::NotADistribution { sum });
        }
        Ok(SemivalueWeights { beta })
    }

    /// The Shapley value's weights: uniform over coalition sizes.
    pub fn shapley(n: usize) -> Self {
        SemivalueWeights {
            beta: vec![1.0 / n as f64; n],
        }
    }

    /// The Banzhaf index's weights: binomial over `2^(n-1)`.
    pub fn banzhaf(n: usize) -> Self {
        let mut beta = Vec::with_capacity(n);
        let mut binom = 1.0f64;
        let scale = 0.5f64.powi(n as i32 - 1);
        for k in 0..n {
            beta.push(binom * scale);
            binom = binom * (n - 1 - k) as f64 / (k + 1) as f64;
        }
        SemivalueWeights { beta }
    }

    pub fn arity(&self) -> usize {
        self.beta.len()
    }

    pub fn beta(&self, k: usize) -> f64 {
        self.beta[k]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.beta
    }
}

/// Two-level weights for games with a community structure: `beta` over
/// coalition-of-community sizes, and one `alpha` table per community over
/// within-community coalition sizes.
#[derive(Debug, Clone)]
pub struct CoalitionalWeights {
    pub beta: Vec<f64>,
    pub alpha: Vec<Vec<f64>>,
}

impl CoalitionalWeights {
    pub fn new(beta: Vec<f64>, alpha: Vec<Vec<f64>>) -> Result<Self, GameError> {
        for table in std::iter::once(&beta).chain(alpha.iter()) {
            let sum: f64 = table.iter().sum();
            if table.iter().any(|&b| b < 0.0) || (sum - 1.0).abs() > 1e-12 {
                return Err(GameError::NotADistribution { sum });
            }
        }
        Ok(CoalitionalWeights { beta, alpha })
    }

    pub fn check_sizes(&self, m: usize, community_sizes: &[usize]) -> Result<(), GameError> {
        if self.beta.len() != m || self.alpha.len() != m {
            return Err(GameError::WrongWeightArity {
                got: self.beta.len(),
                expected: m,
            });
        }
        for (a, &s) in self.alpha.iter().zip(community_sizes) {
            if a.len() != s {
                return Err(GameError::WrongWeightArity {
                    got: a.len(),
                    expected: s,
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coalition_mask_basics() {
        let c = Coalition::from_members(&[0, 3, 5]);
        assert_eq!(c.len(), 3);
        assert!(c.contains(3));
        assert!(!c.contains(1));
        assert_eq!(c.with(1).len(), 4);
        assert_eq!(c.without(3).to_vec(), vec![0, 5]);
        assert_eq!(Coalition::full(3).0, 0b111);
    }

    #[test]
    fn shapley_weights_are_uniform_and_banzhaf_binomial() {
        let s = SemivalueWeights::shapley(4);
        assert!(s.as_slice().iter().all(|&b| (b - 0.25).abs() < 1e-15));
        let b = SemivalueWeights::banzhaf(4);
        let expected = [1.0 / 8.0, 3.0 / 8.0, 3.0 / 8.0, 1.0 / 8.0];
        for (got, want) in b.as_slice().iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_distributions() {
        assert!(SemivalueWeights::new(vec![0.5, 0.4]).is_err());
        assert!(SemivalueWeights::new(vec![1.5, -0.5]).is_err());
    }
}
