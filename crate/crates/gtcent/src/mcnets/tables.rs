//! Exact ordered-coalition count tables for read-once formulas.
//!
//! For a formula over players `X`, the tables count ordered coalitions
//! drawn from `X` by size: `t[k]`/`f[k]` split the `P(|X|, k)` ordered
//! coalitions of size `k` into satisfying and non-satisfying, while
//! `a[k][i]` (`b[k][i]`) counts the non-satisfying (satisfying) ones
//! that flip when player `i` arrives. The insertion-position variant
//! additionally indexes by where the player lands.
//!
//! Connectives combine disjoint-player subformulas by conflation: an
//! interleaving of two ordered coalitions preserving both internal
//! orders, counted by binomial coefficients. All counts are kept as
//! exact big integers and only the final weighted sums leave integer
//! arithmetic.

use super::{Formula, PlayerId};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

pub(crate) fn factorials(n: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n + 1);
    let mut cur = BigUint::one();
    out.push(cur.clone());
    for i in 1..=n {
        cur *= BigUint::from(i);
        out.push(cur.clone());
    }
    out
}

/// `P(r, k) = r!/(r-k)!`: ordered selections of `k` distinct players
/// from `r`.
fn falling(r: usize, k: usize) -> BigUint {
    let mut cur = BigUint::one();
    for i in 0..k {
        cur *= BigUint::from(r - i);
    }
    cur
}

fn pascal(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigUint::zero(); i + 1];
        row[0] = BigUint::one();
        for k in 1..=i {
            row[k] = rows[i - 1][k - 1].clone()
                + rows[i - 1].get(k).cloned().unwrap_or_else(BigUint::zero);
        }
        rows.push(row);
    }
    rows
}

fn choose(pascal: &[Vec<BigUint>], n: usize, k: usize) -> BigUint {
    if k > n {
        BigUint::zero()
    } else {
        pascal[n][k].clone()
    }
}

/// Tables for the joins-last marginal notion.
pub(crate) struct LastTables {
    pub players: Vec<PlayerId>,
    /// `a[k][i]`, `k` in `0..=m`, `i` local player index.
    pub a: Vec<Vec<BigUint>>,
    pub b: Vec<Vec<BigUint>>,
    pub t: Vec<BigUint>,
    pub f: Vec<BigUint>,
}

/// Tables for the insertion-averaged marginal notion:
/// `a[k][i][l]` with position `l` in `1..=k+1` stored at index `l`.
pub(crate) struct PositionTables {
    pub players: Vec<PlayerId>,
    pub a: Vec<Vec<Vec<BigUint>>>,
    pub b: Vec<Vec<Vec<BigUint>>>,
    pub t: Vec<BigUint>,
    pub f: Vec<BigUint>,
}

fn zero_grid(rows: usize, cols: usize) -> Vec<Vec<BigUint>> {
    vec![vec![BigUint::zero(); cols]; rows]
}

fn zero_cube(m: usize, players: usize) -> Vec<Vec<Vec<BigUint>>> {
    (0..=m)
        .map(|k| vec![vec![BigUint::zero(); k + 2]; players])
        .collect()
}

enum Connective {
    And,
    Or,
    Xor,
}

pub(crate) fn last_tables(formula: &Formula) -> LastTables {
    match formula {
        Formula::Baf(ps) => {
            let r = ps.len();
            let mut a = zero_grid(r + 1, r);
            for slot in &mut a[r - 1] {
                *slot = factorials(r - 1)[r - 1].clone();
            }
            let mut t = vec![BigUint::zero(); r + 1];
            t[r] = factorials(r)[r].clone();
            let f = (0..=r).map(|k| falling(r, k) - t[k].clone()).collect();
            LastTables {
                players: ps.clone(),
                a,
                b: zero_grid(r + 1, r),
                t,
                f,
            }
        }
        Formula::Oaf(ps) => {
            let r = ps.len();
            let mut a = zero_grid(r + 1, r);
            a[r - 1][r - 1] = BigUint::one();
            let mut t = vec![BigUint::zero(); r + 1];
            t[r] = BigUint::one();
            let f = (0..=r).map(|k| falling(r, k) - t[k].clone()).collect();
            LastTables {
                players: ps.clone(),
                a,
                b: zero_grid(r + 1, r),
                t,
                f,
            }
        }
        Formula::Not(inner) => {
            let mut t = last_tables(inner);
            std::mem::swap(&mut t.a, &mut t.b);
            std::mem::swap(&mut t.t, &mut t.f);
            t
        }
        Formula::And(l, r) => merge_last(Connective::And, last_tables(l), last_tables(r)),
        Formula::Or(l, r) => merge_last(Connective::Or, last_tables(l), last_tables(r)),
        Formula::Xor(l, r) => merge_last(Connective::Xor, last_tables(l), last_tables(r)),
    }
}

/// Conflation convolution: `out[k] = sum_s C(k, s) x[s] y[k-s]`.
fn conflate(pascal: &[Vec<BigUint>], x: &[BigUint], y: &[BigUint], m: usize) -> Vec<BigUint> {
    let m1 = x.len() - 1;
    let m2 = y.len() - 1;
    (0..=m)
        .map(|k| {
            let mut acc = BigUint::zero();
            for s in k.saturating_sub(m2)..=k.min(m1) {
                if x[s].is_zero() || y[k - s].is_zero() {
                    continue;
                }
                acc += choose(pascal, k, s) * &x[s] * &y[k - s];
            }
            acc
        })
        .collect()
}

fn add_vecs(a: Vec<BigUint>, b: Vec<BigUint>) -> Vec<BigUint> {
    a.into_iter().zip(b).map(|(x, y)| x + y).collect()
}

fn merge_last(op: Connective, left: LastTables, right: LastTables) -> LastTables {
    let m1 = left.players.len();
    let m2 = right.players.len();
    let m = m1 + m2;
    let pascal = pascal(m);

    let (t, f) = merge_truth_counts(&op, &pascal, &left.t, &left.f, &right.t, &right.f, m);

    // For a player inside one operand, that operand's flip counts
    // conflate with the sibling's plain satisfied/unsatisfied counts.
    let per_player = |own_a: &[BigUint], own_b: &[BigUint], other: (&[BigUint], &[BigUint])| {
        let (other_t, other_f) = other;
        match op {
            Connective::And => (
                conflate(&pascal, own_a, other_t, m),
                conflate(&pascal, own_b, other_t, m),
            ),
            Connective::Or => (
                conflate(&pascal, own_a, other_f, m),
                conflate(&pascal, own_b, other_f, m),
            ),
            Connective::Xor => (
                add_vecs(
                    conflate(&pascal, own_b, other_t, m),
                    conflate(&pascal, own_a, other_f, m),
                ),
                add_vecs(
                    conflate(&pascal, own_b, other_f, m),
                    conflate(&pascal, own_a, other_t, m),
                ),
            ),
        }
    };

    let players: Vec<PlayerId> = left
        .players
        .iter()
        .chain(right.players.iter())
        .copied()
        .collect();
    let mut a = zero_grid(m + 1, players.len());
    let mut b = zero_grid(m + 1, players.len());
    for (li, _) in left.players.iter().enumerate() {
        let own_a: Vec<BigUint> = left.a.iter().map(|row| row[li].clone()).collect();
        let own_b: Vec<BigUint> = left.b.iter().map(|row| row[li].clone()).collect();
        let (na, nb) = per_player(&own_a, &own_b, (&right.t, &right.f));
        for k in 0..=m {
            a[k][li] = na[k].clone();
            b[k][li] = nb[k].clone();
        }
    }
    for (ri, _) in right.players.iter().enumerate() {
        let own_a: Vec<BigUint> = right.a.iter().map(|row| row[ri].clone()).collect();
        let own_b: Vec<BigUint> = right.b.iter().map(|row| row[ri].clone()).collect();
        let (na, nb) = per_player(&own_a, &own_b, (&left.t, &left.f));
        for k in 0..=m {
            a[k][m1 + ri] = na[k].clone();
            b[k][m1 + ri] = nb[k].clone();
        }
    }
    LastTables {
        players,
        a,
        b,
        t,
        f,
    }
}

fn merge_truth_counts(
    op: &Connective,
    pascal: &[Vec<BigUint>],
    t1: &[BigUint],
    f1: &[BigUint],
    t2: &[BigUint],
    f2: &[BigUint],
    m: usize,
) -> (Vec<BigUint>, Vec<BigUint>) {
    let tt = conflate(pascal, t1, t2, m);
    let tf = conflate(pascal, t1, f2, m);
    let ft = conflate(pascal, f1, t2, m);
    let ff = conflate(pascal, f1, f2, m);
    match op {
        Connective::And => (tt, add_vecs(add_vecs(ff, ft), tf)),
        Connective::Or => (add_vecs(add_vecs(tt, ft), tf), ff),
        Connective::Xor => (add_vecs(tf, ft), add_vecs(tt, ff)),
    }
}

pub(crate) fn position_tables(formula: &Formula) -> PositionTables {
    match formula {
        Formula::Baf(ps) => {
            let r = ps.len();
            let mut a = zero_cube(r, r);
            let count = factorials(r - 1)[r - 1].clone();
            for i in 0..r {
                for l in 1..=r {
                    a[r - 1][i][l] = count.clone();
                }
            }
            let mut t = vec![BigUint::zero(); r + 1];
            t[r] = factorials(r)[r].clone();
            let f = (0..=r).map(|k| falling(r, k) - t[k].clone()).collect();
            PositionTables {
                players: ps.clone(),
                a,
                b: zero_cube(r, r),
                t,
                f,
            }
        }
        Formula::Oaf(ps) => {
            let r = ps.len();
            let mut a = zero_cube(r, r);
            for (j, row) in a[r - 1].iter_mut().enumerate() {
                // The j-th literal completes the sequence only from its
                // own position.
                row[j + 1] = BigUint::one();
            }
            let mut t = vec![BigUint::zero(); r + 1];
            t[r] = BigUint::one();
            let f = (0..=r).map(|k| falling(r, k) - t[k].clone()).collect();
            PositionTables {
                players: ps.clone(),
                a,
                b: zero_cube(r, r),
                t,
                f,
            }
        }
        Formula::Not(inner) => {
            let mut t = position_tables(inner);
            std::mem::swap(&mut t.a, &mut t.b);
            std::mem::swap(&mut t.t, &mut t.f);
            t
        }
        Formula::And(l, r) => {
            merge_position(Connective::And, position_tables(l), position_tables(r))
        }
        Formula::Or(l, r) => merge_position(Connective::Or, position_tables(l), position_tables(r)),
        Formula::Xor(l, r) => {
            merge_position(Connective::Xor, position_tables(l), position_tables(r))
        }
    }
}

/// Position-indexed conflation: `out[k][l]` sums over the operand's size
/// `s` and inner position `mp`, with `l - mp` sibling players placed
/// before the insertion point and the rest after.
fn conflate_positions(
    pascal: &[Vec<BigUint>],
    own: &[Vec<BigUint>],
    sibling: &[BigUint],
    m: usize,
) -> Vec<Vec<BigUint>> {
    let m1 = own.len();
    let m2 = sibling.len() - 1;
    (0..=m)
        .map(|k| {
            let mut row = vec![BigUint::zero(); k + 2];
            if k > m.saturating_sub(1) {
                return row;
            }
            for (l, slot) in row.iter_mut().enumerate().skip(1).take(k + 1) {
                let mut acc = BigUint::zero();
                for s in k.saturating_sub(m2)..=k.min(m1 - 1) {
                    if sibling[k - s].is_zero() {
                        continue;
                    }
                    for mp in 1..=(s + 1).min(l) {
                        // l - mp sibling players precede the insertion
                        // point; the rest must fit after it.
                        if l - mp > k - s {
                            continue;
                        }
                        let own_count = &own[s][mp];
                        if own_count.is_zero() {
                            continue;
                        }
                        let before = choose(pascal, l - 1, l - mp);
                        if before.is_zero() {
                            continue;
                        }
                        let after = choose(pascal, k + 1 - l, (k - s) - (l - mp));
                        if after.is_zero() {
                            continue;
                        }
                        acc += before * after * own_count * &sibling[k - s];
                    }
                }
                *slot = acc;
            }
            row
        })
        .collect()
}

fn add_cubes(a: Vec<Vec<BigUint>>, b: Vec<Vec<BigUint>>) -> Vec<Vec<BigUint>> {
    a.into_iter()
        .zip(b)
        .map(|(ra, rb)| ra.into_iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

fn merge_position(op: Connective, left: PositionTables, right: PositionTables) -> PositionTables {
    let m1 = left.players.len();
    let m2 = right.players.len();
    let m = m1 + m2;
    let pascal = pascal(m + 1);

    let (t, f) = merge_truth_counts(&op, &pascal, &left.t, &left.f, &right.t, &right.f, m);

    let per_player =
        |own_a: &[Vec<BigUint>], own_b: &[Vec<BigUint>], other: (&[BigUint], &[BigUint])| {
            let (other_t, other_f) = other;
            match op {
                Connective::And => (
                    conflate_positions(&pascal, own_a, other_t, m),
                    conflate_positions(&pascal, own_b, other_t, m),
                ),
                Connective::Or => (
                    conflate_positions(&pascal, own_a, other_f, m),
                    conflate_positions(&pascal, own_b, other_f, m),
                ),
                Connective::Xor => (
                    add_cubes(
                        conflate_positions(&pascal, own_b, other_t, m),
                        conflate_positions(&pascal, own_a, other_f, m),
                    ),
                    add_cubes(
                        conflate_positions(&pascal, own_b, other_f, m),
                        conflate_positions(&pascal, own_a, other_t, m),
                    ),
                ),
            }
        };

    let players: Vec<PlayerId> = left
        .players
        .iter()
        .chain(right.players.iter())
        .copied()
        .collect();
    let mut a = zero_cube(m, players.len());
    let mut b = zero_cube(m, players.len());
    for (li, _) in left.players.iter().enumerate() {
        let own_a: Vec<Vec<BigUint>> = left.a.iter().map(|k| k[li].clone()).collect();
        let own_b: Vec<Vec<BigUint>> = left.b.iter().map(|k| k[li].clone()).collect();
        let (na, nb) = per_player(&own_a, &own_b, (&right.t, &right.f));
        for k in 0..=m {
            a[k][li] = na[k].clone();
            b[k][li] = nb[k].clone();
        }
    }
    for (ri, _) in right.players.iter().enumerate() {
        let own_a: Vec<Vec<BigUint>> = right.a.iter().map(|k| k[ri].clone()).collect();
        let own_b: Vec<Vec<BigUint>> = right.b.iter().map(|k| k[ri].clone()).collect();
        let (na, nb) = per_player(&own_a, &own_b, (&left.t, &left.f));
        for k in 0..=m {
            a[k][m1 + ri] = na[k].clone();
            b[k][m1 + ri] = nb[k].clone();
        }
    }
    PositionTables {
        players,
        a,
        b,
        t,
        f,
    }
}

pub(crate) fn signed_to_f64(pos: &BigUint, neg: &BigUint) -> f64 {
    (BigInt::from(pos.clone()) - BigInt::from(neg.clone()))
        .to_f64()
        .unwrap_or(0.0)
}

pub(crate) fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}
