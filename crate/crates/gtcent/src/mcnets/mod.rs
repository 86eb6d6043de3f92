//! Rule-based games over ordered coalitions.
//!
//! A rule is a read-once boolean formula over two kinds of atoms — plain
//! player sets and player sequences — paying a real value to every
//! ordered coalition that satisfies it. Rule sets add up, which keeps
//! both ordered solution concepts computable one rule at a time.

mod parser;
mod solve;
mod tables;

pub use parser::parse_rules;
pub use solve::{
    classic_rule_shapley, comp_nr, comp_sb, generalized_betweenness, path_betweenness_ruleset,
    OrderedSolution,
};

use crate::games::OrderedGame;
use std::collections::HashMap;
use thiserror::Error;

pub type PlayerId = usize;

#[derive(Debug, Error)]
pub enum McNetsError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("player `{0}` appears more than once in a rule")]
    ReadOnceViolation(String),
    #[error("unknown player `{0}`")]
    UnknownPlayer(String),
    #[error("rule is not a conjunction of positive and negated players")]
    NonConjunctiveRule,
    #[error("a conjunctive rule needs at least one positive player")]
    NoPositivePlayers,
}

/// Read-once boolean formula over atoms of players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    /// Satisfied when every listed player is present, in any order.
    Baf(Vec<PlayerId>),
    /// Satisfied when the listed players appear as a subsequence.
    Oaf(Vec<PlayerId>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Xor(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Players of the formula in syntactic order.
    pub fn players(&self) -> Vec<PlayerId> {
        let mut out = Vec::new();
        self.collect_players(&mut out);
        out
    }

    fn collect_players(&self, out: &mut Vec<PlayerId>) {
        match self {
            Formula::Baf(ps) | Formula::Oaf(ps) => out.extend_from_slice(ps),
            Formula::Not(f) => f.collect_players(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) => {
                a.collect_players(out);
                b.collect_players(out);
            }
        }
    }

    /// Each player may occur at most once per rule.
    pub fn is_read_once(&self) -> bool {
        let mut ps = self.players();
        let before = ps.len();
        ps.sort_unstable();
        ps.dedup();
        ps.len() == before
    }
}

/// Whether an ordered coalition satisfies a formula. The coalition must
/// hold distinct players.
pub fn satisfies(sequence: &[PlayerId], formula: &Formula) -> bool {
    match formula {
        Formula::Baf(ps) => ps.iter().all(|p| sequence.contains(p)),
        Formula::Oaf(ps) => is_subsequence(ps, sequence),
        Formula::Not(f) => !satisfies(sequence, f),
        Formula::And(a, b) => satisfies(sequence, a) && satisfies(sequence, b),
        Formula::Or(a, b) => satisfies(sequence, a) || satisfies(sequence, b),
        Formula::Xor(a, b) => satisfies(sequence, a) != satisfies(sequence, b),
    }
}

fn is_subsequence(needle: &[PlayerId], haystack: &[PlayerId]) -> bool {
    let mut it = haystack.iter();
    needle.iter().all(|p| it.any(|h| h == p))
}

#[derive(Debug, Clone)]
pub struct Rule {
    pub formula: Formula,
    pub value: f64,
}

/// A set of rules over a shared player universe. Players may repeat
/// across rules, never within one.
#[derive(Debug, Clone)]
pub struct RuleSet {
    players: Vec<String>,
    index: HashMap<String, PlayerId>,
    pub rules: Vec<Rule>,
}

impl RuleSet {
    pub fn new(players: Vec<String>) -> Self {
        let index = players
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        RuleSet {
            players,
            index,
            rules: Vec::new(),
        }
    }

    pub fn player_count(&self) -> usize {
        self.players.len()
    }

    pub fn player_label(&self, p: PlayerId) -> &str {
        &self.players[p]
    }

    pub fn player_labels(&self) -> &[String] {
        &self.players
    }

    pub fn player_id(&self, label: &str) -> Option<PlayerId> {
        self.index.get(label).copied()
    }

    pub(crate) fn intern(&mut self, label: &str) -> PlayerId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.players.len();
        self.players.push(label.to_string());
        self.index.insert(label.to_string(), id);
        id
    }

    pub fn push_rule(&mut self, rule: Rule) -> Result<(), McNetsError> {
        if !rule.formula.is_read_once() {
            let mut seen = std::collections::HashSet::new();
            let dup = rule
                .formula
                .players()
                .into_iter()
                .find(|p| !seen.insert(*p))
                .unwrap_or_default();
            return Err(McNetsError::ReadOnceViolation(
                self.players
                    .get(dup)
                    .cloned()
                    .unwrap_or_else(|| dup.to_string()),
            ));
        }
        self.rules.push(rule);
        Ok(())
    }

    /// Value of an ordered coalition: the summed values of satisfied
    /// rules. The empty coalition is worth 0 by definition, even when a
    /// negation-heavy rule would be vacuously satisfied.
    pub fn evaluate(&self, sequence: &[PlayerId]) -> f64 {
        if sequence.is_empty() {
            return 0.0;
        }
        self.rules
            .iter()
            .filter(|r| satisfies(sequence, &r.formula))
            .map(|r| r.value)
            .sum()
    }

    /// Like [`RuleSet::evaluate`] but over player labels.
    pub fn evaluate_labels(&self, labels: &[&str]) -> Result<f64, McNetsError> {
        let seq: Result<Vec<PlayerId>, _> = labels
            .iter()
            .map(|l| {
                self.player_id(l)
                    .ok_or_else(|| McNetsError::UnknownPlayer(l.to_string()))
            })
            .collect();
        Ok(self.evaluate(&seq?))
    }
}

impl OrderedGame for RuleSet {
    fn player_count(&self) -> usize {
        self.players.len()
    }

    fn value(&self, sequence: &[usize]) -> f64 {
        self.evaluate(sequence)
    }
}
