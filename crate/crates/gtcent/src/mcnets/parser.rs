//! Text format for rule sets.
//!
//! One rule per line: `FORMULA -> NUMBER`. Atoms are `{a,b}` (set) and
//! `<a,b>` (sequence); connectives `!`, `&`, `^`, `|` bind in that order
//! and parenthesize freely. `#` starts a comment. An optional header
//! `players: a,b,c` declares players up front so null players exist even
//! when no rule names them.

use super::{Formula, McNetsError, Rule, RuleSet};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    LBrace,
    RBrace,
    LAngle,
    RAngle,
    LParen,
    RParen,
    Comma,
    Not,
    And,
    Or,
    Xor,
    Arrow,
}

fn err(line: usize, message: impl Into<String>) -> McNetsError {
    McNetsError::Parse {
        line,
        message: message.into(),
    }
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Token>, McNetsError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '{' => {
                chars.next();
                tokens.push(Token::LBrace);
            }
            '}' => {
                chars.next();
                tokens.push(Token::RBrace);
            }
            '<' => {
                chars.next();
                tokens.push(Token::LAngle);
            }
            '>' => {
                chars.next();
                tokens.push(Token::RAngle);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            '!' => {
                chars.next();
                tokens.push(Token::Not);
            }
            '&' => {
                chars.next();
                tokens.push(Token::And);
            }
            '|' => {
                chars.next();
                tokens.push(Token::Or);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Xor);
            }
            '-' => {
                chars.next();
                if chars.peek() == Some(&'>') {
                    chars.next();
                    tokens.push(Token::Arrow);
                } else {
                    // Part of a (possibly negative) number.
                    let mut s = String::from("-");
                    while let Some(&c) = chars.peek() {
                        if is_ident_char(c) {
                            s.push(c);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    tokens.push(Token::Ident(s));
                }
            }
            c if is_ident_char(c) => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if is_ident_char(c) {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(s));
            }
            other => return Err(err(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '+')
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    rs: &'a mut RuleSet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), McNetsError> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(err(self.line, format!("expected {what}"))),
        }
    }

    // or := xor ('|' xor)*
    fn parse_or(&mut self) -> Result<Formula, McNetsError> {
        let mut left = self.parse_xor()?;
        while self.peek() == Some(&Token::Or) {
            self.next();
            let right = self.parse_xor()?;
            left = Formula::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn parse_xor(&mut self) -> Result<Formula, McNetsError> {
        let mut left = self.parse_and()?;
        while self.peek() == Some(&Token::Xor) {
            self.next();
            let right = self.parse_and()?;
            left = Formula::Xor(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn parse_and(&mut self) -> Result<Formula, McNetsError> {
        let mut left = self.parse_unary()?;
        while self.peek() == Some(&Token::And) {
            self.next();
            let right = self.parse_unary()?;
            left = Formula::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn parse_unary(&mut self) -> Result<Formula, McNetsError> {
        if self.peek() == Some(&Token::Not) {
            self.next();
            let inner = self.parse_unary()?;
            return Ok(Formula::Not(Box::new(inner)));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Formula, McNetsError> {
        match self.next() {
            Some(Token::LBrace) => {
                let ps = self.parse_players(Token::RBrace, "}")?;
                Ok(Formula::Baf(ps))
            }
            Some(Token::LAngle) => {
                let ps = self.parse_players(Token::RAngle, ">")?;
                Ok(Formula::Oaf(ps))
            }
            Some(Token::LParen) => {
                let f = self.parse_or()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(f)
            }
            _ => Err(err(self.line, "expected `{`, `<` or `(`")),
        }
    }

    fn parse_players(&mut self, close: Token, close_name: &str) -> Result<Vec<usize>, McNetsError> {
        let mut ps = Vec::new();
        loop {
            match self.next() {
                Some(Token::Ident(name)) => ps.push(self.rs.intern(&name)),
                _ => return Err(err(self.line, "expected a player name")),
            }
            match self.next() {
                Some(Token::Comma) => continue,
                Some(t) if t == close => break,
                _ => return Err(err(self.line, format!("expected `,` or `{close_name}`"))),
            }
        }
        if ps.is_empty() {
            return Err(err(self.line, "empty atomic formula"));
        }
        // Players within one atom must be distinct.
        let mut sorted = ps.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != ps.len() {
            return Err(err(self.line, "player repeated inside an atom"));
        }
        Ok(ps)
    }
}

/// Parses a rule-set file (or inline text).
pub fn parse_rules(text: &str) -> Result<RuleSet, McNetsError> {
    let mut rs = RuleSet::new(Vec::new());
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("players:") {
            for name in rest.split(',') {
                let name = name.trim();
                if name.is_empty() {
                    return Err(err(line, "empty player name in header"));
                }
                rs.intern(name);
            }
            continue;
        }
        let tokens = tokenize(trimmed, line)?;
        // The value is everything after the final arrow.
        let arrow = tokens
            .iter()
            .rposition(|t| *t == Token::Arrow)
            .ok_or_else(|| err(line, "missing `->`"))?;
        let value = match &tokens[arrow + 1..] {
            [Token::Ident(s)] => s
                .parse::<f64>()
                .map_err(|_| err(line, format!("bad rule value `{s}`")))?,
            _ => return Err(err(line, "expected a single number after `->`")),
        };
        let mut parser = Parser {
            tokens: tokens[..arrow].to_vec(),
            pos: 0,
            line,
            rs: &mut rs,
        };
        let formula = parser.parse_or()?;
        if parser.pos != parser.tokens.len() {
            return Err(err(line, "trailing tokens in formula"));
        }
        rs.push_rule(Rule { formula, value })?;
    }
    Ok(rs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_sequence_rule() {
        let rs = parse_rules("<a,b> -> 1\n").unwrap();
        assert_eq!(rs.rules.len(), 1);
        assert_eq!(rs.player_count(), 2);
        assert_eq!(rs.rules[0].formula, Formula::Oaf(vec![0, 1]));
        assert_eq!(rs.rules[0].value, 1.0);
    }

    #[test]
    fn parses_mixed_atoms_and_connectives() {
        let rs = parse_rules("{a2,a5} & <a1,a3> -> 2.5\n").unwrap();
        assert_eq!(
            rs.rules[0].formula,
            Formula::And(
                Box::new(Formula::Baf(vec![0, 1])),
                Box::new(Formula::Oaf(vec![2, 3]))
            )
        );
        assert_eq!(rs.rules[0].value, 2.5);
    }

    #[test]
    fn rejects_read_once_violation() {
        let e = parse_rules("{a} & <a,b> -> 1\n").unwrap_err();
        assert!(matches!(e, McNetsError::ReadOnceViolation(p) if p == "a"));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(parse_rules("{a,b -> 1\n").is_err());
        assert!(parse_rules("{} -> 1\n").is_err());
        assert!(parse_rules("{a}\n").is_err());
        assert!(parse_rules("{a} -> x\n").is_err());
    }

    #[test]
    fn header_and_comments() {
        let rs = parse_rules("# a null player c\nplayers: a, b, c\n{a} & {b} -> 2 # pays two\n")
            .unwrap();
        assert_eq!(rs.player_count(), 3);
        assert_eq!(rs.player_id("c"), Some(2));
    }

    #[test]
    fn precedence_not_and_xor_or() {
        let rs = parse_rules("players: a,b,c,d\n!{a} & {b} ^ {c} | {d} -> 1\n").unwrap();
        // ((!a & b) ^ c) | d
        match &rs.rules[0].formula {
            Formula::Or(left, right) => {
                assert_eq!(**right, Formula::Baf(vec![3]));
                match &**left {
                    Formula::Xor(l, r) => {
                        assert_eq!(**r, Formula::Baf(vec![2]));
                        assert!(matches!(&**l, Formula::And(_, _)));
                    }
                    other => panic!("unexpected {other:?}"),
                }
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(rs.rules[0].formula.is_read_once());
    }

    #[test]
    fn negative_values_parse() {
        let rs = parse_rules("{a} -> -2.5\n").unwrap();
        assert_eq!(rs.rules[0].value, -2.5);
    }
}
