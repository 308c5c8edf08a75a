//! Structured documents emitted by `--format json`.
//!
//! Each document deserializes back into the same type, and rendering the
//! parsed value again yields the same bytes.

use serde::{Deserialize, Serialize};
use trel_core::tableau::{BranchStatus, ClosingPair, Rule};
use trel_core::{
    Classification, EquivalenceVerdict, Formula, Outcome, RelevanceReport, Strategy, TableMode,
    TableauResult, TruthTable, TruthValue, VarSet, Variable,
};

fn names(vars: &[Variable]) -> Vec<String> {
    vars.iter().map(|v| v.name().to_owned()).collect()
}

fn braces(set: &[String]) -> String {
    format!("{{{}}}", set.join(", "))
}

fn node_label(id: usize) -> String {
    format!("N{}", id + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Ast {
    Var { name: String },
    Not { operand: Box<Ast> },
    And { left: Box<Ast>, right: Box<Ast> },
    Or { left: Box<Ast>, right: Box<Ast> },
    Implies { left: Box<Ast>, right: Box<Ast> },
}

impl From<&Formula> for Ast {
    fn from(f: &Formula) -> Self {
        let b = |x: &Formula| Box::new(Ast::from(x));
        match f {
            Formula::Var(v) => Ast::Var { name: v.name().to_owned() },
            Formula::Not(a) => Ast::Not { operand: b(a) },
            Formula::And(l, r) => Ast::And { left: b(l), right: b(r) },
            Formula::Or(l, r) => Ast::Or { left: b(l), right: b(r) },
            Formula::Implies(l, r) => Ast::Implies { left: b(l), right: b(r) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseDoc {
    pub formula: String,
    pub variables: Vec<String>,
    pub tree: Ast,
}

impl ParseDoc {
    pub fn new(f: &Formula) -> Self {
        ParseDoc { formula: f.to_string(), variables: names(&f.vars()), tree: Ast::from(f) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalDoc {
    pub formula: String,
    pub assignment: String,
    pub value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub values: Vec<TruthValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<TruthValue>,
    pub value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub formula: String,
    pub mode: TableMode,
    pub variables: Vec<String>,
    pub varied: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub columns: Vec<String>,
    pub rows: Vec<RowDoc>,
}

impl TableDoc {
    pub fn new(t: &TruthTable, steps: bool) -> Self {
        let columns = if steps {
            trel_core::table::connective_columns(&t.formula).iter().map(|c| c.to_string()).collect()
        } else {
            Vec::new()
        };
        let rows = t
            .rows
            .iter()
            .map(|row| RowDoc {
                values: row.values.clone(),
                steps: if steps {
                    trel_core::table::connective_values(&t.formula, &t.variables, &row.values).1
                } else {
                    Vec::new()
                },
                value: row.value,
            })
            .collect();
        TableDoc {
            formula: t.formula.to_string(),
            mode: t.mode,
            variables: names(&t.variables),
            varied: t.varied.names(),
            columns,
            rows,
        }
    }

    /// The value column as `x,T,T,T`.
    pub fn values(&self) -> String {
        self.rows.iter().map(|r| r.value.to_string()).collect::<Vec<_>>().join(",")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelevanceDoc {
    pub formula: String,
    pub variables: Vec<String>,
    pub minimal_determining_sets: Vec<Vec<String>>,
    pub redundant: Vec<String>,
    pub relevant: Vec<String>,
    pub t_relevant: bool,
    pub tautology: bool,
    pub classification: Classification,
}

impl RelevanceDoc {
    pub fn new(r: &RelevanceReport) -> Self {
        RelevanceDoc {
            formula: r.formula.to_string(),
            variables: names(&r.variables),
            minimal_determining_sets: r.minimal_determining_sets.iter().map(VarSet::names).collect(),
            redundant: r.redundant.names(),
            relevant: r.relevant.names(),
            t_relevant: r.is_t_relevant,
            tautology: r.is_tautology,
            classification: r.classification,
        }
    }

    pub fn sets(&self) -> String {
        self.minimal_determining_sets.iter().map(|s| braces(s)).collect::<Vec<_>>().join(", ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: String,
    pub formula: String,
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub variable: String,
    pub earlier: String,
    pub later: String,
}

impl From<&ClosingPair> for PairDoc {
    fn from(p: &ClosingPair) -> Self {
        PairDoc {
            variable: p.variable.name().to_owned(),
            earlier: node_label(p.earlier),
            later: node_label(p.later),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchState {
    Open,
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDoc {
    pub nodes: Vec<String>,
    pub status: BranchState,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_on: Option<PairDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    pub formula: String,
    pub strategy: Strategy,
    pub outcome: Outcome,
    /// Absent when the tree stays open.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closing_set: Option<Vec<String>>,
    /// Every minimal closing set; only under the exhaustive strategy.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub closing_sets: Vec<Vec<String>>,
    pub nodes: Vec<NodeDoc>,
    pub branches: Vec<BranchDoc>,
}

impl TableauDoc {
    pub fn new(t: &TableauResult) -> Self {
        let nodes = t
            .nodes
            .iter()
            .map(|n| NodeDoc {
                id: node_label(n.id),
                formula: n.formula.to_string(),
                rule: n.rule,
                source: n.source.map(node_label),
                parent: n.parent.map(node_label),
            })
            .collect();
        let branches = t
            .branches
            .iter()
            .map(|b| BranchDoc {
                nodes: b.nodes.iter().copied().map(node_label).collect(),
                status: if b.is_closed() { BranchState::Closed } else { BranchState::Open },
                closed_on: match &b.status {
                    BranchStatus::Closed(pair) => Some(PairDoc::from(pair)),
                    BranchStatus::Open => None,
                },
            })
            .collect();
        TableauDoc {
            formula: t.formula.to_string(),
            strategy: t.strategy,
            outcome: t.outcome,
            closing_set: t.closing_set.as_ref().map(VarSet::names),
            closing_sets: t.alternatives.iter().map(VarSet::names).collect(),
            nodes,
            branches,
        }
    }

    pub fn closing_set_text(&self) -> String {
        match &self.closing_set {
            Some(s) => braces(s),
            None => "-".to_owned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub assignment: String,
    pub formula_value: TruthValue,
    pub canonical_value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub formula: String,
    pub set: Vec<String>,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl CheckDoc {
    pub fn new(f: &Formula, set: &VarSet, verdict: &EquivalenceVerdict) -> Self {
        CheckDoc {
            formula: f.to_string(),
            set: set.names(),
            holds: verdict.holds,
            witness: verdict.witness.as_ref().map(|w| WitnessDoc {
                assignment: w.assignment.to_string(),
                formula_value: w.formula_value,
                canonical_value: w.canonical_value,
            }),
        }
    }

    pub fn set_text(&self) -> String {
        braces(&self.set)
    }
}
