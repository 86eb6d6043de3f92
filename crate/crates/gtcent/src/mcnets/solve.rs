//! Solution concepts on rule sets, one rule at a time (the values are
//! additive over rules), plus the generalized betweenness construction.

use super::tables::{big_to_f64, factorials, last_tables, position_tables, signed_to_f64};
use super::{Formula, McNetsError, PlayerId, Rule, RuleSet};
use crate::graph::{path_betweenness, sssp, DistanceMode, Graph, NodeId};
use num_bigint::BigInt;
use num_traits::Zero;

/// Which ordered solution concept to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderedSolution {
    /// Marginal contribution taken when the player joins last.
    NowakRadzik,
    /// Marginal contribution averaged over all insertion positions.
    SanchezBergantinos,
}

/// Joins-last value of a rule set, per player of the universe.
///
/// Per rule, the flip counts are folded with `(m-k-1)!` permutation
/// weights; a player may flip a formula on in some coalitions and off in
/// others (exclusive disjunction does this), so the positive and
/// negative counts are combined signed.
pub fn comp_nr(rs: &RuleSet) -> Vec<f64> {
    let n = rs.player_count();
    let mut phi = vec![0.0; n];
    for rule in &rs.rules {
        if rule.value == 0.0 {
            continue;
        }
        let tables = last_tables(&rule.formula);
        let m = tables.players.len();
        let fact = factorials(m);
        let scale = big_to_f64(&fact[m]);
        for (local, &global) in tables.players.iter().enumerate() {
            let mut numer = BigInt::zero();
            for k in 0..m {
                let weight = &fact[m - k - 1];
                let diff = BigInt::from(tables.a[k][local].clone())
                    - BigInt::from(tables.b[k][local].clone());
                numer += diff * BigInt::from(weight.clone());
            }
            let v = num_traits::ToPrimitive::to_f64(&numer).unwrap_or(0.0) / scale;
            phi[global] += rule.value * v;
        }
        vacuous_correction(rs, rule, &mut phi);
    }
    phi
}

/// A rule satisfied by the empty coalition pays on every nonempty
/// prefix, but the truly empty coalition is worth 0 by definition. The
/// flip tables price the first global mover against the vacuous value,
/// so each player (null players included) gets the difference back:
/// the whole rule value at first-mover probability `1/n`.
fn vacuous_correction(rs: &RuleSet, rule: &super::Rule, phi: &mut [f64]) {
    if super::satisfies(&[], &rule.formula) {
        let bonus = rule.value / rs.player_count() as f64;
        for p in phi.iter_mut() {
            *p += bonus;
        }
    }
}

/// Insertion-averaged value of a rule set, per player of the universe.
pub fn comp_sb(rs: &RuleSet) -> Vec<f64> {
    let n = rs.player_count();
    let mut phi = vec![0.0; n];
    for rule in &rs.rules {
        if rule.value == 0.0 {
            continue;
        }
        let tables = position_tables(&rule.formula);
        let m = tables.players.len();
        let fact = factorials(m);
        let scale = big_to_f64(&fact[m]);
        for (local, &global) in tables.players.iter().enumerate() {
            let mut v = 0.0;
            for k in 0..m {
                let mut pos = num_bigint::BigUint::zero();
                let mut neg = num_bigint::BigUint::zero();
                for l in 1..=k + 1 {
                    pos += &tables.a[k][local][l];
                    neg += &tables.b[k][local][l];
                }
                let diff = signed_to_f64(&pos, &neg);
                v += big_to_f64(&fact[m - k - 1]) * diff / (k as f64 + 1.0);
            }
            phi[global] += rule.value * v / scale;
        }
        vacuous_correction(rs, rule, &mut phi);
    }
    phi
}

/// Shapley value of one conjunctive rule (positive players and negated
/// single players only): positive literals share `V / (p * C(p+n, n))`,
/// negated ones `-V / (n * C(p+n, p))`.
pub fn classic_rule_shapley(rs: &RuleSet, rule: &Rule) -> Result<Vec<f64>, McNetsError> {
    let mut positive: Vec<PlayerId> = Vec::new();
    let mut negative: Vec<PlayerId> = Vec::new();
    flatten_conjunction(&rule.formula, &mut positive, &mut negative)?;
    if positive.is_empty() {
        return Err(McNetsError::NoPositivePlayers);
    }
    let p = positive.len();
    let n = negative.len();
    let mut phi = vec![0.0; rs.player_count()];
    let pos_share = rule.value / (p as f64 * binomial(p + n, n));
    for &i in &positive {
        phi[i] = pos_share;
    }
    if n > 0 {
        let neg_share = -rule.value / (n as f64 * binomial(p + n, p));
        for &i in &negative {
            phi[i] = neg_share;
        }
    }
    Ok(phi)
}

fn flatten_conjunction(
    f: &Formula,
    positive: &mut Vec<PlayerId>,
    negative: &mut Vec<PlayerId>,
) -> Result<(), McNetsError> {
    match f {
        Formula::Baf(ps) => {
            positive.extend_from_slice(ps);
            Ok(())
        }
        Formula::Not(inner) => match &**inner {
            Formula::Baf(ps) if ps.len() == 1 => {
                negative.push(ps[0]);
                Ok(())
            }
            _ => Err(McNetsError::NonConjunctiveRule),
        },
        Formula::And(a, b) => {
            flatten_conjunction(a, positive, negative)?;
            flatten_conjunction(b, positive, negative)
        }
        _ => Err(McNetsError::NonConjunctiveRule),
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut cur = 1.0f64;
    for i in 0..k.min(n - k) {
        cur = cur * (n - i) as f64 / (i + 1) as f64;
    }
    cur
}

/// Every geodesic of the graph as a rule: the path sequence must appear
/// in order and no other node may be present, paying the sequence's
/// path betweenness.
pub fn path_betweenness_ruleset(g: &Graph) -> RuleSet {
    let n = g.node_count();
    let mut rs = RuleSet::new(g.labels().to_vec());
    let mode = if g.is_weighted() {
        DistanceMode::Weighted
    } else {
        DistanceMode::Unweighted
    };
    let all_nodes: Vec<NodeId> = (0..n).collect();
    for s in 0..n {
        let sp = sssp(g, s, mode);
        for t in 0..n {
            if t == s || sp.sigma[t] == 0.0 {
                continue;
            }
            for path in geodesics_between(&sp, s, t) {
                let value = path_betweenness(g, &path).expect("distinct path nodes");
                let inside: std::collections::HashSet<NodeId> = path.iter().copied().collect();
                let outside: Vec<NodeId> = all_nodes
                    .iter()
                    .copied()
                    .filter(|v| !inside.contains(v))
                    .collect();
                let head = Formula::Oaf(path);
                let formula = if outside.is_empty() {
                    head
                } else {
                    Formula::And(
                        Box::new(head),
                        Box::new(Formula::Not(Box::new(Formula::Baf(outside)))),
                    )
                };
                rs.push_rule(Rule { formula, value }).expect("read-once");
            }
        }
    }
    rs
}

/// All geodesics from the SSSP source to `t`, in forward order.
fn geodesics_between(sp: &crate::graph::SsspResult, s: NodeId, t: NodeId) -> Vec<Vec<NodeId>> {
    let mut out = Vec::new();
    let mut stack = vec![t];
    collect_paths(sp, s, t, &mut stack, &mut out);
    out
}

fn collect_paths(
    sp: &crate::graph::SsspResult,
    s: NodeId,
    cur: NodeId,
    stack: &mut Vec<NodeId>,
    out: &mut Vec<Vec<NodeId>>,
) {
    if cur == s {
        out.push(stack.iter().rev().copied().collect());
        return;
    }
    for &p in &sp.preds[cur] {
        stack.push(p);
        collect_paths(sp, s, p, stack, out);
        stack.pop();
    }
}

/// Ordered-solution betweenness centrality: one rule per geodesic,
/// solved with the requested concept. Polynomial in the number of
/// shortest paths.
pub fn generalized_betweenness(g: &Graph, solution: OrderedSolution) -> Vec<f64> {
    let rs = path_betweenness_ruleset(g);
    match solution {
        OrderedSolution::NowakRadzik => comp_nr(&rs),
        OrderedSolution::SanchezBergantinos => comp_sb(&rs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::games::{
        coalition_game, nr_oracle, sb_oracle, shapley_oracle_with_limit, Coalition,
    };
    use crate::mcnets::{parse_rules, satisfies};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_sequence_rule_values() {
        let rs = parse_rules("<a,b> -> 1\n").unwrap();
        let nr = comp_nr(&rs);
        assert!(nr[0].abs() < 1e-12);
        assert!((nr[1] - 0.5).abs() < 1e-12);
        let sb = comp_sb(&rs);
        assert!((sb[0] - 0.25).abs() < 1e-12);
        assert!((sb[1] - 0.25).abs() < 1e-12);
    }

    #[test]
    fn symmetric_set_rule_splits_evenly() {
        let rs = parse_rules("{a,b,c} -> 6\n").unwrap();
        for &x in &comp_nr(&rs) {
            assert!((x - 2.0).abs() < 1e-12);
        }
        for &x in &comp_sb(&rs) {
            assert!((x - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn classic_rule_vectors() {
        let rs = parse_rules(
            "players: a1,a2,a3\n\
             {a2} -> 400\n\
             {a1} & !{a2} -> 200\n\
             {a3} & !{a1} & !{a2} -> 200\n\
             {a1,a2,a3} -> 200\n",
        )
        .unwrap();
        let third = 1.0 / 3.0;
        let expect = [
            vec![0.0, 400.0, 0.0],
            vec![100.0, -100.0, 0.0],
            vec![-100.0 * third, -100.0 * third, 200.0 * third],
            vec![200.0 * third, 200.0 * third, 200.0 * third],
        ];
        let mut total = [0.0; 3];
        for (rule, want) in rs.rules.iter().zip(&expect) {
            let got = classic_rule_shapley(&rs, rule).unwrap();
            for (g, w) in got.iter().zip(want) {
                assert!((g - w).abs() < 1e-9, "{got:?} vs {want:?}");
            }
            for (t, g) in total.iter_mut().zip(&got) {
                *t += g;
            }
        }
        // Per-rule vectors add to the full game's solution.
        let third = 1.0 / 3.0;
        for (t, w) in total
            .iter()
            .zip([133.0 + third, 333.0 + third, 133.0 + third])
        {
            assert!((t - w).abs() < 1e-9);
        }
        let pair = parse_rules("{a,b} -> 1\n").unwrap();
        let got = classic_rule_shapley(&pair, &pair.rules[0]).unwrap();
        assert!((got[0] - 0.5).abs() < 1e-12 && (got[1] - 0.5).abs() < 1e-12);
        let bad = parse_rules("{a} | {b} -> 1\n").unwrap();
        assert!(classic_rule_shapley(&bad, &bad.rules[0]).is_err());
    }

    #[test]
    fn conjunctive_rules_match_the_joins_last_solver() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let players = ["a", "b", "c", "d", "e", "f", "g"];
            let n = rng.gen_range(2..=7usize);
            let pos_count = rng.gen_range(1..=n);
            let mut text = String::new();
            let mut atoms: Vec<String> = Vec::new();
            let positives: Vec<&str> = players[..pos_count].to_vec();
            atoms.push(format!("{{{}}}", positives.join(",")));
            for p in &players[pos_count..n] {
                atoms.push(format!("!{{{p}}}"));
            }
            text.push_str(&format!(
                "players: {}\n{} -> 3.5\n",
                players[..n].join(","),
                atoms.join(" & ")
            ));
            let rs = parse_rules(&text).unwrap();
            let classic = classic_rule_shapley(&rs, &rs.rules[0]).unwrap();
            let nr = comp_nr(&rs);
            for (a, b) in classic.iter().zip(&nr) {
                assert!((a - b).abs() < 1e-9, "{text}");
            }
        }
    }

    #[test]
    fn xor_flip_counts_combine_signed() {
        // A player can both satisfy and unsatisfy an exclusive
        // disjunction depending on what joined before it.
        let rs = parse_rules("{a} ^ {b} -> 1\n").unwrap();
        let nr = comp_nr(&rs);
        let oracle = nr_oracle(&rs).unwrap();
        for (a, b) in nr.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-12, "{nr:?} vs {oracle:?}");
        }
    }

    fn random_read_once_formula(
        rng: &mut ChaCha8Rng,
        pool: &mut Vec<String>,
        depth: usize,
    ) -> Option<String> {
        if pool.is_empty() {
            return None;
        }
        let make_atom = depth >= 4 || rng.gen_bool(0.45);
        if make_atom {
            let take = rng.gen_range(1..=pool.len().min(3));
            let mut names = Vec::with_capacity(take);
            for _ in 0..take {
                let idx = rng.gen_range(0..pool.len());
                names.push(pool.swap_remove(idx));
            }
            let inner = names.join(",");
            return Some(if rng.gen_bool(0.5) {
                format!("{{{inner}}}")
            } else {
                format!("<{inner}>")
            });
        }
        let left = random_read_once_formula(rng, pool, depth + 1)?;
        if let Some(right) = random_read_once_formula(rng, pool, depth + 1) {
            let op = ["&", "|", "^"][rng.gen_range(0..3)];
            let joined = format!("({left} {op} {right})");
            Some(if rng.gen_bool(0.25) {
                format!("!{joined}")
            } else {
                joined
            })
        } else {
            Some(if rng.gen_bool(0.25) {
                format!("!{left}")
            } else {
                left
            })
        }
    }

    #[test]
    fn random_rule_sets_match_the_ordered_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let names = ["a", "b", "c", "d", "e", "f", "g"];
        for round in 0..60 {
            let n = rng.gen_range(3..=6usize);
            let rules = rng.gen_range(1..=3usize);
            let mut text = format!("players: {}\n", names[..n].join(","));
            for _ in 0..rules {
                let mut pool: Vec<String> = names[..n].iter().map(|s| s.to_string()).collect();
                let formula = random_read_once_formula(&mut rng, &mut pool, 0).unwrap();
                let value: f64 = rng.gen_range(-2.0..2.0);
                text.push_str(&format!("{formula} -> {value}\n"));
            }
            let rs = parse_rules(&text).unwrap();
            let fast_nr = comp_nr(&rs);
            let oracle_nr = nr_oracle(&rs).unwrap();
            for (a, b) in fast_nr.iter().zip(&oracle_nr) {
                assert!((a - b).abs() < 1e-9, "round {round} NR\n{text}");
            }
            let fast_sb = comp_sb(&rs);
            let oracle_sb = sb_oracle(&rs).unwrap();
            for (a, b) in fast_sb.iter().zip(&oracle_sb) {
                assert!((a - b).abs() < 1e-9, "round {round} SB\n{text}");
            }
        }
    }

    #[test]
    fn de_morgan_on_disjoint_supports() {
        let lhs = parse_rules("!({a,b} | <c,d>) -> 1\n").unwrap();
        let rhs = parse_rules("!{a,b} & !<c,d> -> 1\n").unwrap();
        let players = [0usize, 1, 2, 3];
        for mask in 0u32..16 {
            let chosen: Vec<usize> = players
                .iter()
                .copied()
                .filter(|&i| mask >> i & 1 == 1)
                .collect();
            crate::games::for_each_permutation(chosen.len(), |perm| {
                let seq: Vec<usize> = perm.iter().map(|&p| chosen[p]).collect();
                assert_eq!(
                    satisfies(&seq, &lhs.rules[0].formula),
                    satisfies(&seq, &rhs.rules[0].formula)
                );
            });
        }
    }

    #[test]
    fn null_players_from_the_header_stay_zero() {
        let rs = parse_rules("players: a,b,ghost\n<a,b> -> 1\n").unwrap();
        let nr = comp_nr(&rs);
        assert_eq!(nr[2], 0.0);
        let sb = comp_sb(&rs);
        assert_eq!(sb[2], 0.0);
    }

    #[test]
    fn path_rules_on_small_graphs() {
        let p3 = fixtures::path_graph(3);
        let rs = path_betweenness_ruleset(&p3);
        assert!(rs.rules.iter().all(|r| r.value == 0.0));
        for &x in &generalized_betweenness(&p3, OrderedSolution::NowakRadzik) {
            assert!(x.abs() < 1e-12);
        }

        let p4 = fixtures::path_graph(4);
        let rs = path_betweenness_ruleset(&p4);
        let speaking: Vec<(Vec<usize>, f64)> = rs
            .rules
            .iter()
            .filter(|r| r.value != 0.0)
            .map(|r| match &r.formula {
                Formula::And(head, _) => match &**head {
                    Formula::Oaf(seq) => (seq.clone(), r.value),
                    _ => panic!("expected a sequence head"),
                },
                _ => panic!("expected guarded rule"),
            })
            .collect();
        // The middle link is the only positively valued sequence, in
        // both traversal directions.
        assert_eq!(speaking.len(), 2);
        for (seq, value) in &speaking {
            assert_eq!(value, &1.0);
            assert!(seq == &vec![1, 2] || seq == &vec![2, 1]);
        }

        let edge = fixtures::path_graph(2);
        for &x in &generalized_betweenness(&edge, OrderedSolution::SanchezBergantinos) {
            assert!(x.abs() < 1e-12);
        }
    }

    #[test]
    fn generalized_betweenness_vs_true_ordered_game() {
        // The rule encoding is only guaranteed to reproduce the path
        // betweenness of full geodesic sequences; compare against the
        // exact ordered game and report the gap instead of asserting
        // equality.
        for (name, g) in [
            ("p4", fixtures::path_graph(4)),
            ("cycle5", fixtures::cycle_graph(5)),
            ("star4", fixtures::star_graph(3)),
            ("gnm6", crate::graph::random::connected_gnm(6, 3, 2)),
        ] {
            let n = g.node_count();
            let truth = crate::games::ordered_game(n, |seq: &[usize]| {
                path_betweenness(&g, seq).unwrap_or(0.0)
            });
            let oracle = nr_oracle(&truth).unwrap();
            let fast = generalized_betweenness(&g, OrderedSolution::NowakRadzik);
            let gap = fast
                .iter()
                .zip(&oracle)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            println!("{name}: rule encoding vs exact ordered game, max gap {gap:.6}");
            assert!(gap.is_finite());
        }
    }

    #[test]
    fn rule_values_are_efficient() {
        // Totals equal the average full-coalition value over all orders.
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let names = ["a", "b", "c", "d", "e"];
            let n = rng.gen_range(3..=5usize);
            let mut pool: Vec<String> = names[..n].iter().map(|s| s.to_string()).collect();
            let formula = random_read_once_formula(&mut rng, &mut pool, 0).unwrap();
            let text = format!("players: {}\n{} -> 1\n", names[..n].join(","), formula);
            let rs = parse_rules(&text).unwrap();
            let mut grand_total = 0.0;
            let mut perms = 0usize;
            crate::games::for_each_permutation(n, |perm| {
                grand_total += rs.evaluate(perm);
                perms += 1;
            });
            let expected = grand_total / perms as f64;
            let nr_sum: f64 = comp_nr(&rs).iter().sum();
            assert!((nr_sum - expected).abs() < 1e-9, "{text}");
            let sb_sum: f64 = comp_sb(&rs).iter().sum();
            assert!((sb_sum - expected).abs() < 1e-9, "{text}");
        }
    }

    #[test]
    fn sb_symmetry_within_one_sequence_atom() {
        let rs = parse_rules("<a,b,c> -> 3\n").unwrap();
        let sb = comp_sb(&rs);
        assert!((sb[0] - sb[1]).abs() < 1e-12);
        assert!((sb[1] - sb[2]).abs() < 1e-12);
    }

    #[test]
    fn order_insensitive_rules_equal_the_set_shapley() {
        // Set-atom-only rules define order-independent games, where both
        // ordered concepts coincide with the Shapley value.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let names = ["a", "b", "c", "d", "e", "f"];
            let n = rng.gen_range(3..=6usize);
            let mut text = format!("players: {}\n", names[..n].join(","));
            for _ in 0..2 {
                let mut pool: Vec<String> = names[..n].iter().map(|s| s.to_string()).collect();
                let mut formula = String::new();
                while formula.is_empty() || formula.contains('<') {
                    let mut p = pool.clone();
                    formula = random_read_once_formula(&mut rng, &mut p, 0)
                        .unwrap()
                        .to_string();
                    if !formula.contains('<') {
                        pool = p;
                    }
                }
                text.push_str(&format!("{formula} -> 1.5\n"));
            }
            let rs = parse_rules(&text).unwrap();
            let set_game = coalition_game(n, |c: Coalition| rs.evaluate(&c.to_vec()));
            let sv = shapley_oracle_with_limit(&set_game, n).unwrap();
            for (route, result) in [("nr", comp_nr(&rs)), ("sb", comp_sb(&rs))] {
                for (a, b) in result.iter().zip(&sv) {
                    assert!((a - b).abs() < 1e-9, "{route}\n{text}");
                }
            }
        }
    }
}
