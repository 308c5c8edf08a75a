//! Truth-determining sets, truth-redundant variables and t-relevance.
//!
//! A set `S` of variables is truth determining for `f` when every assignment
//! of `T`/`F` to `S`, with all other variables pinned to `X`, gives `f` a
//! definite strong-table value. Determining sets are closed under supersets,
//! so `p` is redundant exactly when `vars(f) \ {p}` is determining.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{is_tautology, Program};
use crate::formula::{Formula, Variable};
use crate::options::{Exec, Options};
use crate::par;
use crate::varset::VarSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    NotTautology,
    TautologyNotTRelevant,
    TRelevantTautology,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NotTautology => "NOT_TAUTOLOGY",
            Classification::TautologyNotTRelevant => "TAUTOLOGY_NOT_T_RELEVANT",
            Classification::TRelevantTautology => "T_RELEVANT_TAUTOLOGY",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelevanceReport {
    pub formula: Formula,
    pub variables: Vec<Variable>,
    /// Every inclusion-minimal determining set, by ascending size and then
    /// lexicographically in canonical variable order.
    pub minimal_determining_sets: Vec<VarSet>,
    pub redundant: VarSet,
    pub relevant: VarSet,
    pub is_t_relevant: bool,
    pub is_tautology: bool,
    pub classification: Classification,
}

fn join_sets(sets: &[VarSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for RelevanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "formula: {}", self.formula)?;
        writeln!(f, "minimal determining sets: {}", join_sets(&self.minimal_determining_sets))?;
        writeln!(f, "redundant: {}", self.redundant)?;
        writeln!(f, "relevant: {}", self.relevant)?;
        writeln!(f, "t-relevant: {}", if self.is_t_relevant { "yes" } else { "no" })?;
        write!(f, "classification: {}", self.classification)
    }
}

/// Checks the `|S|`-bit enumeration for a set given as a mask over
/// `program.vars()`.
pub(crate) fn determining_mask(program: &Program, mask: u64, exec: Exec) -> bool {
    let k = mask.count_ones();
    par::find_first(exec, 1 << k, |row| !program.eval_partial(mask, row).is_definite()).is_none()
}

/// Whether `s` is truth determining for `f`.
pub fn is_determining(f: &Formula, s: &VarSet, opts: &Options) -> Result<bool> {
    let program = Program::compile(f);
    let mask = s.to_mask(program.vars())?;
    opts.check_two(s.len())?;
    Ok(determining_mask(&program, mask, opts.exec))
}

/// Whether some determining set for `f` excludes `p`.
pub fn is_redundant(f: &Formula, p: &Variable, opts: &Options) -> Result<bool> {
    let program = Program::compile(f);
    let vars = program.vars();
    let i = vars
        .iter()
        .position(|v| v == p)
        .ok_or_else(|| Error::UnknownVariable(p.name().to_owned()))?;
    opts.check_two(vars.len())?;
    let all = (1u64 << vars.len()) - 1;
    Ok(determining_mask(&program, all & !(1 << i), opts.exec))
}

/// All `k`-element subsets of `0..n` as masks, in lexicographic order of
/// their index sequences.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=(n - k) {
            go(i + 1, n, k - 1, acc | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, 0, &mut out);
    }
    out
}

/// Minimal determining sets as masks, by ascending size then lexicographic.
pub(crate) fn minimal_determining_masks(program: &Program, exec: Exec) -> Vec<u64> {
    let n = program.vars().len();
    let mut found: Vec<u64> = Vec::new();
    for size in 1..=n {
        let candidates: Vec<u64> = combinations(n, size)
            .into_iter()
            // Supersets of a set already found are determining but not minimal.
            .filter(|&c| found.iter().all(|&m| m & !c != 0))
            .collect();
        let hits = par::filter(exec, candidates, |&c| determining_mask(program, c, Exec::Sequential));
        found.extend(hits);
    }
    found
}

/// Full relevance report for `f`.
pub fn analyze(f: &Formula, opts: &Options) -> Result<RelevanceReport> {
    let program = Program::compile(f);
    let variables = program.vars().to_vec();
    let n = variables.len();
    opts.check_three(n)?;
    let tautology = is_tautology(f, opts)?;
    let minimal = minimal_determining_masks(&program, opts.exec);
    let all = (1u64 << n) - 1;
    let redundant_flags =
        par::map_range(opts.exec, n as u64, |i| determining_mask(&program, all & !(1 << i), Exec::Sequential));
    let redundant_mask = redundant_flags
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .fold(0u64, |m, (i, _)| m | (1 << i));
    let is_t_relevant = redundant_mask == 0;
    let classification = match (tautology, is_t_relevant) {
        (false, _) => Classification::NotTautology,
        (true, false) => Classification::TautologyNotTRelevant,
        (true, true) => Classification::TRelevantTautology,
    };
    Ok(RelevanceReport {
        formula: f.clone(),
        minimal_determining_sets: minimal.iter().map(|&m| VarSet::from_mask(&variables, m)).collect(),
        redundant: VarSet::from_mask(&variables, redundant_mask),
        relevant: VarSet::from_mask(&variables, all & !redundant_mask),
        is_t_relevant,
        is_tautology: tautology,
        classification,
        variables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn set(f: &Formula, names: &str) -> VarSet {
        VarSet::parse(&f.vars(), names).unwrap()
    }

    fn var(name: &str) -> Variable {
        Variable::new(name).unwrap()
    }

    #[test]
    fn peirce_determining_sets() {
        let opts = Options::default();
        let f = parse("((A -> B) -> A) -> A").unwrap();
        assert!(is_determining(&f, &set(&f, "A"), &opts).unwrap());
        assert!(!is_determining(&f, &set(&f, "B"), &opts).unwrap());
        assert!(is_redundant(&f, &var("B"), &opts).unwrap());
        assert!(!is_redundant(&f, &var("A"), &opts).unwrap());
    }

    #[test]
    fn double_excluded_middle() {
        let opts = Options::default();
        let f = parse("(P | ~P) | (Q | ~Q)").unwrap();
        assert!(!is_determining(&f, &VarSet::default(), &opts).unwrap());
        assert!(is_determining(&f, &set(&f, "P"), &opts).unwrap());
        assert!(is_determining(&f, &set(&f, "Q"), &opts).unwrap());
    }

    #[test]
    fn weakening() {
        let opts = Options::default();
        let f = parse("P -> (Q -> P)").unwrap();
        assert!(is_redundant(&f, &var("Q"), &opts).unwrap());
        assert!(!is_redundant(&f, &var("P"), &opts).unwrap());
    }

    #[test]
    fn unknown_variable_is_an_error() {
        let f = parse("P -> Q").unwrap();
        let err = is_redundant(&f, &var("R"), &Options::default()).unwrap_err();
        assert_eq!(err, Error::UnknownVariable("R".into()));
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(3, 2), vec![0b011, 0b101, 0b110]);
        assert_eq!(combinations(3, 0), vec![0]);
        assert_eq!(combinations(2, 3), Vec::<u64>::new());
    }

    #[test]
    fn contradiction_is_analyzed() {
        let f = parse("(P & ~P) & Q").unwrap();
        let report = analyze(&f, &Options::default()).unwrap();
        assert_eq!(report.classification, Classification::NotTautology);
        // P = F alone makes the conjunction false.
        assert_eq!(report.minimal_determining_sets, vec![set(&f, "P")]);
        assert_eq!(report.redundant, set(&f, "Q"));
    }

    #[test]
    fn report_text() {
        let f = parse("((A -> B) -> A) -> A").unwrap();
        let report = analyze(&f, &Options::default()).unwrap();
        assert_eq!(
            report.to_string(),
            "formula: ((A -> B) -> A) -> A\n\
             minimal determining sets: {A}\n\
             redundant: {B}\n\
             relevant: {A}\n\
             t-relevant: no\n\
             classification: TAUTOLOGY_NOT_T_RELEVANT"
        );
    }
}
