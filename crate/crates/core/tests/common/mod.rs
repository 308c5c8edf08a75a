//! Formula generators and brute-force oracles shared by the integration tests.
//!
//! The oracles only use the tree-walking evaluators and `Assignment`, never
//! the compiled programs or bitmask searches they are checking.

#![allow(dead_code)]

use proptest::prelude::*;
use trel_core::{eval2, eval3, Assignment, Formula, TruthValue, Variable};

pub fn names(n: usize) -> Vec<&'static str> {
    ["P", "Q", "R", "S", "U", "W"][..n].to_vec()
}

pub fn arb_formula(vars: usize, depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(names(vars)).prop_map(Formula::var);
    leaf.prop_recursive(depth, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

/// Every formula of height at most `levels` (a variable has height 1).
pub fn all_formulas(vars: usize, levels: u32) -> Vec<Formula> {
    let leaves: Vec<Formula> = names(vars).into_iter().map(Formula::var).collect();
    let mut current = leaves.clone();
    for _ in 1..levels {
        let mut next = leaves.clone();
        for a in &current {
            next.push(Formula::not(a.clone()));
        }
        for a in &current {
            for b in &current {
                next.push(Formula::and(a.clone(), b.clone()));
                next.push(Formula::or(a.clone(), b.clone()));
                next.push(Formula::implies(a.clone(), b.clone()));
            }
        }
        current = next;
    }
    current
}

/// Every assignment of `values` to `vars`, first variable most significant.
pub fn assignments(vars: &[Variable], values: &[TruthValue]) -> Vec<Assignment> {
    let mut out = vec![Assignment::new()];
    for v in vars {
        let mut next = Vec::new();
        for a in &out {
            for &value in values {
                let mut b = a.clone();
                b.set(v.clone(), value);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

pub fn oracle_tautology(f: &Formula) -> bool {
    assignments(&f.vars(), &TruthValue::DEFINITE)
        .iter()
        .all(|a| eval2(f, a).unwrap() == TruthValue::T)
}

/// Definition-level check: every T/F assignment to `s` with the rest unknown
/// yields a definite value.
pub fn oracle_determining(f: &Formula, s: &[Variable]) -> bool {
    let rest: Vec<Variable> = f.vars().into_iter().filter(|v| !s.contains(v)).collect();
    assignments(s, &TruthValue::DEFINITE).into_iter().all(|mut a| {
        for v in &rest {
            a.set(v.clone(), TruthValue::X);
        }
        eval3(f, &a).unwrap().is_definite()
    })
}

pub fn subsets(vars: &[Variable]) -> Vec<Vec<Variable>> {
    (0u32..(1 << vars.len()))
        .map(|m| vars.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).map(|(_, v)| v.clone()).collect())
        .collect()
}

/// Minimal determining sets by brute force over all subsets.
pub fn oracle_minimal_sets(f: &Formula) -> Vec<Vec<Variable>> {
    let determining: Vec<Vec<Variable>> =
        subsets(&f.vars()).into_iter().filter(|s| oracle_determining(f, s)).collect();
    let mut minimal: Vec<Vec<Variable>> = determining
        .iter()
        .filter(|s| !determining.iter().any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v))))
        .cloned()
        .collect();
    let vars = f.vars();
    let key = |s: &Vec<Variable>| {
        let idx: Vec<usize> = s.iter().map(|v| vars.iter().position(|x| x == v).unwrap()).collect();
        (idx.len(), idx)
    };
    minimal.sort_by_key(key);
    minimal
}

pub fn parse(text: &str) -> Formula {
    trel_core::parse(text).unwrap()
}

pub const PEIRCE: &str = "((A -> B) -> A) -> A";
pub const SYLLOGISM: &str = "(P -> Q) -> ((Q -> R) -> (P -> R))";
pub const DOUBLE_LEM: &str = "(P | ~P) | (Q | ~Q)";
pub const EITHER_WAY: &str = "(~B | M) | (~M | B)";
pub const PARADOX: &str = "(P & ~P) -> Q";
pub const LEM_OR_Q: &str = "(P | ~P) | Q";
pub const WEAKENING: &str = "P -> (Q -> P)";
