//! Variable-to-value maps and their `P=T,Q=X` text syntax.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formula::Variable;
use crate::value::TruthValue;

/// An ordered map from variables to truth values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    entries: Vec<(Variable, TruthValue)>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    /// Pairs `vars` with `values` positionally.
    pub fn from_values(vars: &[Variable], values: &[TruthValue]) -> Self {
        assert_eq!(vars.len(), values.len());
        Assignment { entries: vars.iter().cloned().zip(values.iter().copied()).collect() }
    }

    /// Every variable of `vars` mapped to `value`.
    pub fn uniform(vars: &[Variable], value: TruthValue) -> Self {
        Assignment { entries: vars.iter().map(|v| (v.clone(), value)).collect() }
    }

    /// Sets a value, replacing an existing entry in place.
    pub fn set(&mut self, var: Variable, value: TruthValue) {
        match self.entries.iter_mut().find(|(v, _)| *v == var) {
            Some(entry) => entry.1 = value,
            None => self.entries.push((var, value)),
        }
    }

    pub fn with(mut self, var: &str, value: TruthValue) -> Self {
        let var = Variable::new(var).unwrap_or_else(|| panic!("illegal variable name {var:?}"));
        self.set(var, value);
        self
    }

    pub fn get(&self, var: &Variable) -> Option<TruthValue> {
        self.entries.iter().find(|(v, _)| v == var).map(|(_, value)| *value)
    }

    pub fn value_of(&self, var: &Variable) -> Result<TruthValue> {
        self.get(var).ok_or_else(|| Error::MissingVariable(var.name().to_owned()))
    }

    /// Values of `vars` in order, failing on the first missing one.
    pub fn project(&self, vars: &[Variable]) -> Result<Vec<TruthValue>> {
        vars.iter().map(|v| self.value_of(v)).collect()
    }

    pub fn is_definite(&self) -> bool {
        self.entries.iter().all(|(_, value)| value.is_definite())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, TruthValue)> {
        self.entries.iter().map(|(v, value)| (v, *value))
    }

    pub fn variables(&self) -> impl Iterator<Item = &Variable> {
        self.entries.iter().map(|(v, _)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pointwise information order over the variables of `self`.
    pub fn approximates(&self, other: &Assignment) -> bool {
        self.entries
            .iter()
            .all(|(v, value)| other.get(v).is_some_and(|o| value.approximates(o)))
    }
}

/// Renders as `A=T,B=x`.
impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (var, value)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{var}={value}")?;
        }
        Ok(())
    }
}

impl FromStr for Assignment {
    type Err = Error;

    /// Parses comma-separated `name=V` pairs, `V` one of `T`, `F`, `X`
    /// (either case). Whitespace around items is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Assignment::new();
        if s.trim().is_empty() {
            return Ok(out);
        }
        for item in s.split(',') {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidAssignment(format!("`{}` is not of the form name=V", item.trim())))?;
            let name = name.trim();
            let var = Variable::new(name)
                .ok_or_else(|| Error::InvalidAssignment(format!("`{name}` is not a variable name")))?;
            let value: TruthValue =
                value.trim().parse().map_err(|e: crate::value::InvalidTruthValue| Error::InvalidAssignment(e.to_string()))?;
            if out.get(&var).is_some() {
                return Err(Error::InvalidAssignment(format!("`{name}` assigned twice")));
            }
            out.entries.push((var, value));
        }
        Ok(out)
    }
}
