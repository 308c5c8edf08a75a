//! Exhaustive comparison of a formula against `(R1 | ~R1) & … & (Rm | ~Rm)`.

use std::fmt;

use crate::assignment::Assignment;
use crate::error::{Error, Result};
use crate::eval::{decode_row, Program};
use crate::formula::Formula;
use crate::options::Options;
use crate::par;
use crate::value::TruthValue;
use crate::varset::VarSet;

/// The conjunction of excluded-middle instances over a nonempty variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalConjunction {
    variables: VarSet,
}

impl CanonicalConjunction {
    pub fn new(variables: VarSet) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(CanonicalConjunction { variables })
    }

    pub fn variables(&self) -> &VarSet {
        &self.variables
    }

    /// `T` when every member is definite in `a`, `X` otherwise; never `F`.
    pub fn value(&self, a: &Assignment) -> Result<TruthValue> {
        let mut all_definite = true;
        for v in &self.variables {
            all_definite &= a.value_of(v)?.is_definite();
        }
        Ok(if all_definite { TruthValue::T } else { TruthValue::X })
    }

    /// `(R1 | ~R1) & ((R2 | ~R2) & …)`, nested to the right.
    pub fn to_formula(&self) -> Formula {
        right_nested(&self.variables, Formula::and, |r| Formula::or(r.clone(), Formula::not(r)))
    }
}

fn right_nested(
    vars: &VarSet,
    join: fn(Formula, Formula) -> Formula,
    term: impl Fn(Formula) -> Formula,
) -> Formula {
    let mut terms: Vec<Formula> = vars.iter().map(|v| term(Formula::Var(v.clone()))).collect();
    let mut acc = terms.pop().expect("nonempty set");
    while let Some(t) = terms.pop() {
        acc = join(t, acc);
    }
    acc
}

/// Value of the canonical conjunction over `r` under `a`.
pub fn canonical_value(r: &CanonicalConjunction, a: &Assignment) -> Result<TruthValue> {
    r.value(a)
}

/// `(R1 & ~R1) | ((R2 & ~R2) | …)`, nested to the right.
pub fn negated_form(r: &VarSet) -> Result<Formula> {
    if r.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(right_nested(r, Formula::or, |v| Formula::and(v.clone(), Formula::not(v))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub assignment: Assignment,
    pub formula_value: TruthValue,
    pub canonical_value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub holds: bool,
    /// The first assignment, in `T < F < X` lexicographic order, on which
    /// the two sides differ.
    pub witness: Option<Witness>,
}

/// Renders `EQUIVALENT` or `NOT EQUIVALENT at <assignment>: L=<v>, canon=<v>`.
impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("EQUIVALENT"),
            Some(w) => write!(
                f,
                "NOT EQUIVALENT at {}: L={}, canon={}",
                w.assignment, w.formula_value, w.canonical_value
            ),
        }
    }
}

/// Compares `l` with the canonical conjunction over `r` on all `3^n`
/// assignments to `vars(l)`.
pub fn check_equivalence(l: &Formula, r: &VarSet, opts: &Options) -> Result<EquivalenceVerdict> {
    if r.is_empty() {
        return Err(Error::EmptySet);
    }
    let program = Program::compile(l);
    let vars = program.vars();
    let n = vars.len();
    let mask = r.to_mask(vars)?;
    opts.check_three(n)?;

    let canonical = |values: &[TruthValue]| {
        let definite = values
            .iter()
            .enumerate()
            .all(|(i, v)| mask & (1 << i) == 0 || v.is_definite());
        if definite {
            TruthValue::T
        } else {
            TruthValue::X
        }
    };
    let first = par::find_first(opts.exec, 3u64.pow(n as u32), |row| {
        let values = decode_row(row, n, &TruthValue::ALL);
        program.eval(&values) != canonical(&values)
    });
    Ok(match first {
        None => EquivalenceVerdict { holds: true, witness: None },
        Some(row) => {
            let values = decode_row(row, n, &TruthValue::ALL);
            EquivalenceVerdict {
                holds: false,
                witness: Some(Witness {
                    assignment: Assignment::from_values(vars, &values),
                    formula_value: program.eval(&values),
                    canonical_value: canonical(&values),
                }),
            }
        }
    })
}
