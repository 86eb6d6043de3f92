//! Size-indexed shortest-path counts for weighted graphs.
//!
//! `T[i]` is the number of shortest s→t paths containing exactly `i`
//! nodes. These arrays behave like polynomials: extending every counted
//! path by one node shifts indices up, concatenating path families
//! multiplies the polynomials.

use super::{sssp, DistanceMode, Graph, NodeId};

/// Path counts bucketed by the number of nodes on the path.
///
/// Index 0 is unused; valid sizes are `1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathCountPolynomial {
    coeffs: Vec<f64>,
}

impl PathCountPolynomial {
    pub fn zero(n: usize) -> Self {
        PathCountPolynomial {
            coeffs: vec![0.0; n + 2],
        }
    }

    /// The polynomial of the trivial one-node path: coefficient 1 at size 1.
    pub fn source(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[1] = 1.0;
        p
    }

    pub fn coeff(&self, size: usize) -> f64 {
        self.coeffs.get(size).copied().unwrap_or(0.0)
    }

    pub fn set_coeff(&mut self, size: usize, value: f64) {
        self.coeffs[size] = value;
    }

    /// Largest representable size (`n`).
    pub fn max_size(&self) -> usize {
        self.coeffs.len() - 2
    }

    /// Total number of counted paths; equals sigma for s→t counts.
    pub fn total(&self) -> f64 {
        self.coeffs.iter().sum()
    }

    pub fn reset(&mut self) {
        self.coeffs.fill(0.0);
    }

    /// Increases every size index by one (every path gains a node).
    pub fn shifted_right(&self) -> Self {
        let mut out = Self::zero(self.max_size());
        for i in (1..=self.max_size()).rev() {
            out.coeffs[i + 1] = self.coeffs[i];
        }
        out
    }

    /// Decreases every size index by one.
    pub fn shifted_left(&self) -> Self {
        let mut out = Self::zero(self.max_size());
        for i in 2..self.coeffs.len() {
            out.coeffs[i - 1] = self.coeffs[i];
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// Adds `other` shifted one size up; the accumulation step of the
    /// path-count recursion.
    pub fn add_shifted(&mut self, other: &Self) {
        let hi = self.coeffs.len() - 1;
        for i in 1..hi {
            self.coeffs[i + 1] += other.coeffs[i];
        }
    }

    /// Schoolbook product, truncated at the representable maximum size.
    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.max_size();
        let mut out = Self::zero(n);
        for i in 1..=n {
            if self.coeffs[i] == 0.0 {
                continue;
            }
            for j in 1..=n {
                if i + j > n + 1 {
                    break;
                }
                out.coeffs[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        out
    }

    /// Sizes with a nonzero count.
    pub fn support(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0.0)
            .map(|(i, &c)| (i, c))
    }
}

/// Per-target path-count polynomials from one source of a weighted graph.
///
/// `T[t][i]` counts the shortest s→t paths with exactly `i` nodes;
/// the per-target totals equal the sigma counts of [`sssp`].
pub fn path_count_polynomials(g: &Graph, s: NodeId) -> Vec<PathCountPolynomial> {
    let n = g.node_count();
    let sp = sssp(g, s, DistanceMode::Weighted);
    let mut t: Vec<PathCountPolynomial> = (0..n).map(|_| PathCountPolynomial::zero(n)).collect();
    t[s] = PathCountPolynomial::source(n);
    // Settling order is topological for the shortest-path DAG.
    for &v in &sp.order {
        if v == s {
            continue;
        }
        let mut acc = PathCountPolynomial::zero(n);
        for &u in &sp.preds[v] {
            acc.add_shifted(&t[u]);
        }
        t[v] = acc;
    }
    t
}
