//! Recursive-descent parser for the concrete formula syntax.
//!
//! ```text
//! formula  := iff ;
//! iff      := implies ( ("<->" | "↔") iff )? ;
//! implies  := or ( ("->" | "→") implies )? ;
//! or       := and ( ("|" | "∨" | "v") and )* ;
//! and      := unary ( ("&" | "∧") unary )* ;
//! unary    := ("~" | "¬" | "∼") unary | atom ;
//! atom     := IDENT | "(" formula ")" ;
//! ```
//!
//! `A <-> B` is desugared to `(A -> B) & (B -> A)`.

use std::fmt;

use crate::formula::{Formula, SourceSpan, Variable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at {}: expected {}, found {}",
            self.span, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    /// Renders the input with a caret line under the offending span.
    pub fn annotate(&self, input: &str) -> String {
        let prefix = input.get(..self.span.start).unwrap_or(input);
        let width = input
            .get(self.span.start..self.span.end)
            .map(|s| s.chars().count())
            .unwrap_or(0)
            .max(1);
        format!(
            "{self}\n  {input}\n  {}{}",
            " ".repeat(prefix.chars().count()),
            "^".repeat(width)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, SourceSpan)>, ParseError> {
    let mut toks = Vec::new();
    let mut iter = input.char_indices().peekable();
    while let Some(&(start, c)) = iter.peek() {
        if c.is_whitespace() {
            iter.next();
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = start;
            while let Some(&(i, c)) = iter.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    iter.next();
                } else {
                    break;
                }
            }
            let word = &input[start..end];
            let tok = if word == "v" { Tok::Or } else { Tok::Ident(word.to_owned()) };
            toks.push((tok, SourceSpan::new(start, end)));
            continue;
        }
        let rest = &input[start..];
        let (tok, len) = if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Implies, 2)
        } else {
            let tok = match c {
                '~' | '¬' | '∼' => Tok::Not,
                '&' | '∧' => Tok::And,
                '|' | '∨' => Tok::Or,
                '→' => Tok::Implies,
                '↔' => Tok::Iff,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(ParseError {
                        span: SourceSpan::new(start, start + c.len_utf8()),
                        expected: "a variable, connective or parenthesis".into(),
                        found: format!("`{c}`"),
                    })
                }
            };
            (tok, c.len_utf8())
        };
        for _ in rest[..len].chars() {
            iter.next();
        }
        toks.push((tok, SourceSpan::new(start, start + len)));
    }
    toks.push((Tok::Eof, SourceSpan::new(input.len(), input.len())));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, SourceSpan)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> (Tok, SourceSpan) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let (tok, span) = &self.toks[self.pos];
        ParseError { span: *span, expected: expected.into(), found: tok.describe() }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let left = self.implies()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let right = self.iff()?;
            return Ok(Formula::and(
                Formula::implies(left.clone(), right.clone()),
                Formula::implies(right, left),
            ));
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let left = self.or()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let right = self.implies()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            acc = Formula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                // The lexer only produces legal identifiers.
                Ok(Formula::Var(Variable::new(&name).expect("lexed identifier")))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("a variable, `~` or `(`")),
        }
    }
}

/// Parses a formula, accepting ASCII and Unicode connective spellings.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0 };
    let f = parser.iff()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.error("a connective or end of input"));
    }
    Ok(f)
}
