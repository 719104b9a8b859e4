//! Helpers shared by the integration suites: an independent DOT grammar
//! checker and a Pascal-triangle binomial oracle. Both deliberately
//! avoid the code paths they are used to check.

#![allow(dead_code)]

use riffle::formulas::BigCount;

/// What a well-formed DOT file contained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DotSummary {
    pub node_count: usize,
    pub edge_count: usize,
}

/// Validates `text` against the directed-graph subset of the DOT
/// grammar (node statements, edge statements, attribute lists) and
/// reports what it found.
pub fn check_dot(text: &str) -> Result<DotSummary, String> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, at: 0 };
    parser.graph()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Id(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Equals,
    Comma,
    Semi,
    Arrow,
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\r' | '\n' => {
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
            '[' => {
                chars.next();
                tokens.push(Token::LBracket);
            }
            ']' => {
                chars.next();
                tokens.push(Token::RBracket);
            }
            '=' => {
                chars.next();
                tokens.push(Token::Equals);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            ';' => {
                chars.next();
                tokens.push(Token::Semi);
            }
            '-' => {
                chars.next();
                match chars.next() {
                    Some('>') => tokens.push(Token::Arrow),
                    other => return Err(format!("expected `->`, found `-{other:?}`")),
                }
            }
            '"' => {
                chars.next();
                let mut value = String::new();
                loop {
                    match chars.next() {
                        None => return Err("unterminated quoted string".into()),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(escaped) => value.push(escaped),
                            None => return Err("unterminated escape".into()),
                        },
                        Some(inner) => value.push(inner),
                    }
                }
                tokens.push(Token::Id(value));
            }
            c if c.is_ascii_digit() => {
                let mut value = String::new();
                let mut dots = 0;
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() || d == '.' {
                        dots += usize::from(d == '.');
                        value.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if dots > 1 {
                    return Err(format!("malformed numeral `{value}`"));
                }
                tokens.push(Token::Id(value));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut value = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        value.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Id(value));
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn next(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.at).cloned();
        self.at += 1;
        token
    }

    fn expect_id(&mut self) -> Result<String, String> {
        match self.next() {
            Some(Token::Id(value)) => Ok(value),
            other => Err(format!("expected identifier, found {other:?}")),
        }
    }

    fn graph(&mut self) -> Result<DotSummary, String> {
        let keyword = self.expect_id()?;
        if keyword != "digraph" {
            return Err(format!("expected `digraph`, found `{keyword}`"));
        }
        if matches!(self.peek(), Some(Token::Id(_))) {
            self.next(); // optional graph name
        }
        if self.next() != Some(Token::LBrace) {
            return Err("expected `{`".into());
        }

        let mut summary = DotSummary {
            node_count: 0,
            edge_count: 0,
        };
        loop {
            match self.peek() {
                Some(Token::RBrace) => {
                    self.next();
                    break;
                }
                Some(Token::Id(_)) => self.statement(&mut summary)?,
                other => return Err(format!("expected statement or `}}`, found {other:?}")),
            }
        }
        if self.at != self.tokens.len() {
            return Err("trailing tokens after closing `}`".into());
        }
        Ok(summary)
    }

    fn statement(&mut self, summary: &mut DotSummary) -> Result<(), String> {
        self.expect_id()?;
        let mut edges = 0;
        while self.peek() == Some(&Token::Arrow) {
            self.next();
            self.expect_id()?;
            edges += 1;
        }
        while self.peek() == Some(&Token::LBracket) {
            self.attr_list()?;
        }
        if self.peek() == Some(&Token::Semi) {
            self.next();
        }
        if edges == 0 {
            summary.node_count += 1;
        } else {
            summary.edge_count += edges;
        }
        Ok(())
    }

    fn attr_list(&mut self) -> Result<(), String> {
        if self.next() != Some(Token::LBracket) {
            return Err("expected `[`".into());
        }
        loop {
            match self.peek() {
                Some(Token::RBracket) => {
                    self.next();
                    return Ok(());
                }
                Some(Token::Id(_)) => {
                    self.expect_id()?;
                    if self.next() != Some(Token::Equals) {
                        return Err("expected `=` in attribute".into());
                    }
                    self.expect_id()?;
                    if matches!(self.peek(), Some(Token::Comma) | Some(Token::Semi)) {
                        self.next();
                    }
                }
                other => return Err(format!("expected attribute or `]`, found {other:?}")),
            }
        }
    }
}

/// Binomial coefficients by Pascal's rule: an additive route independent
/// of the multiplicative implementation it is used to check.
pub fn pascal_table(max_n: usize) -> Vec<Vec<BigCount>> {
    let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut row = vec![BigCount::from(1u32); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checker_accepts_a_minimal_digraph() {
        let summary = check_dot("digraph g { 1 [label=\"01\"]; 1 -> 2 [kind=shift]; 2; }").unwrap();
        assert_eq!(
            summary,
            DotSummary {
                node_count: 2,
                edge_count: 1
            }
        );
    }

    #[test]
    fn checker_rejects_malformed_text() {
        assert!(check_dot("graph g { }").is_err());
        assert!(check_dot("digraph g { 1 -> }").is_err());
        assert!(check_dot("digraph g { 1 [label=]; }").is_err());
        assert!(check_dot("digraph g { 1 }} ").is_err());
        assert!(check_dot("digraph g { \"unterminated }").is_err());
    }

    #[test]
    fn pascal_rows_are_binomials() {
        let table = pascal_table(10);
        assert_eq!(table[9][5], BigCount::from(126u32));
        assert_eq!(table[10][5], BigCount::from(252u32));
    }
}
