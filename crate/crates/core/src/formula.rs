//! Formula syntax trees, variables, and the pretty-printer.

use std::fmt;
use std::sync::Arc;

/// A propositional sentence letter.
///
/// Names are case-sensitive; `X` is an ordinary variable name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable(Arc<str>);

impl Variable {
    /// Creates a variable, returning `None` if `name` is not a legal identifier.
    pub fn new(name: &str) -> Option<Self> {
        if is_identifier(name) {
            Some(Variable(Arc::from(name)))
        } else {
            None
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

/// `[A-Za-z][A-Za-z0-9_]*`, excluding the standalone disjunction token `v`.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    name != "v" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Byte offsets into parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// A formula over variables and the connectives `~`, `&`, `|`, `->`.
///
/// There are no constants: every leaf is a variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(Variable),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Panics if `name` is not a legal identifier.
    pub fn var(name: &str) -> Formula {
        Formula::Var(Variable::new(name).unwrap_or_else(|| panic!("illegal variable name {name:?}")))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Distinct variables in order of first occurrence, left to right.
    ///
    /// This is the canonical column order for tables, assignments and
    /// variable sets.
    pub fn vars(&self) -> Vec<Variable> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<Variable>) {
        match self {
            Formula::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Formula::Not(a) => a.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Not(a) => a.leaf_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.leaf_count() + b.leaf_count()
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Not(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// A literal is a variable or a negated variable.
    pub fn as_literal(&self) -> Option<(&Variable, bool)> {
        match self {
            Formula::Var(v) => Some((v, true)),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Var(v) => Some((v, false)),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn is_literal(&self) -> bool {
        self.as_literal().is_some()
    }

    fn is_binary(&self) -> bool {
        !matches!(self, Formula::Var(_) | Formula::Not(_))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({self})")
    }
}

/// Renders with ASCII connectives. A binary operand of a binary connective is
/// always parenthesized, so `A & B & C` prints as `(A & B) & C`. The output
/// parses back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Not(a) if a.is_binary() => write!(f, "~({a})"),
            Formula::Not(a) => write!(f, "~{a}"),
            Formula::And(a, b) => write_binary(f, a, "&", b),
            Formula::Or(a, b) => write_binary(f, a, "|", b),
            Formula::Implies(a, b) => write_binary(f, a, "->", b),
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, operand: &Formula) -> fmt::Result {
    if operand.is_binary() {
        write!(f, "({operand})")
    } else {
        write!(f, "{operand}")
    }
}

fn write_binary(f: &mut fmt::Formatter<'_>, left: &Formula, op: &str, right: &Formula) -> fmt::Result {
    write_operand(f, left)?;
    write!(f, " {op} ")?;
    write_operand(f, right)
}
