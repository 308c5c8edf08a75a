use std::fmt;

use crate::error::{Error, Result};
use crate::formula::Variable;

/// A set of variables kept in the canonical (first-occurrence) order of the
/// formula it was built against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VarSet {
    vars: Vec<Variable>,
}

impl VarSet {
    /// Builds a set of `members` ordered by `universe`. Duplicates collapse.
    /// Fails if a member is not in `universe`.
    pub fn new<I>(universe: &[Variable], members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Variable>,
    {
        let mut mask = 0u64;
        for m in members {
            let i = universe
                .iter()
                .position(|u| *u == m)
                .ok_or_else(|| Error::UnknownVariable(m.name().to_owned()))?;
            mask |= 1 << i;
        }
        Ok(VarSet::from_mask(universe, mask))
    }

    /// Parses a comma-separated list of names, e.g. `A,B`.
    pub fn parse(universe: &[Variable], text: &str) -> Result<Self> {
        let mut members = Vec::new();
        for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let var = Variable::new(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_owned()))?;
            members.push(var);
        }
        VarSet::new(universe, members)
    }

    pub fn all(universe: &[Variable]) -> Self {
        VarSet { vars: universe.to_vec() }
    }

    /// Bit `i` of `mask` selects `universe[i]`.
    pub fn from_mask(universe: &[Variable], mask: u64) -> Self {
        let vars = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .collect();
        VarSet { vars }
    }

    pub fn to_mask(&self, universe: &[Variable]) -> Result<u64> {
        let mut mask = 0u64;
        for v in &self.vars {
            let i = universe
                .iter()
                .position(|u| u == v)
                .ok_or_else(|| Error::UnknownVariable(v.name().to_owned()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Variable> {
        self.vars.iter()
    }

    pub fn as_slice(&self) -> &[Variable] {
        &self.vars
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name().to_owned()).collect()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn contains(&self, v: &Variable) -> bool {
        self.vars.contains(v)
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.vars.iter().all(|v| other.contains(v))
    }
}

impl<'a> IntoIterator for &'a VarSet {
    type Item = &'a Variable;
    type IntoIter = std::slice::Iter<'a, Variable>;

    fn into_iter(self) -> Self::IntoIter {
        self.vars.iter()
    }
}

/// Renders as `{A, B}`.
impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Canonical positions of the members of `mask`, ascending.
pub(crate) fn mask_indices(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// Lexicographic comparison of two masks by their canonical index sequences.
pub(crate) fn lex_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    mask_indices(a).cmp(&mask_indices(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe() -> Vec<Variable> {
        ["P", "Q", "R"].iter().map(|n| Variable::new(n).unwrap()).collect()
    }

    #[test]
    fn canonical_order_and_dedup() {
        let u = universe();
        let s = VarSet::parse(&u, "R, P,R").unwrap();
        assert_eq!(s.to_string(), "{P, R}");
        assert_eq!(s.to_mask(&u).unwrap(), 0b101);
        assert_eq!(VarSet::parse(&u, "").unwrap().to_string(), "{}");
    }

    #[test]
    fn rejects_foreign_variables() {
        let u = universe();
        assert_eq!(VarSet::parse(&u, "P,S"), Err(Error::UnknownVariable("S".into())));
    }

    #[test]
    fn lexicographic_masks() {
        use std::cmp::Ordering::*;
        assert_eq!(lex_cmp(0b001, 0b010), Less);
        assert_eq!(lex_cmp(0b011, 0b010), Less);
        assert_eq!(lex_cmp(0b110, 0b101), Greater);
    }
}
