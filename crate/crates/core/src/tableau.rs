//! Refutation trees for `~L` and the closing-variable sets they produce.
//!
//! The tree starts at `~L`. α-rules stack their components on the current
//! branch, β-rules split it in two. A branch is checked for closure each time a
//! node is added, and only complementary literals `V` / `~V` close it. The
//! variables named by the closing pairs form the closing set; formulas left
//! unexpanded on a closed branch stay in the tree but never contribute to it.
//!
//! When every branch closes, the refutation shows `L` is not false. If the
//! closing set is all of `vars(L)` it shows `L` true.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{Formula, Variable};
use crate::options::Options;
use crate::varset::{lex_cmp, VarSet};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Root,
    /// `A & B ⇒ A, B`
    And,
    /// `~(A | B) ⇒ ~A, ~B`
    NotOr,
    /// `~(A -> B) ⇒ A, ~B`
    NotImplies,
    /// `~~A ⇒ A`
    NotNot,
    /// `A | B ⇒ A ∣ B`
    Or,
    /// `~(A & B) ⇒ ~A ∣ ~B`
    NotAnd,
    /// `A -> B ⇒ ~A ∣ B`
    Implies,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Root => "root",
            Rule::And => "and",
            Rule::NotOr => "not-or",
            Rule::NotImplies => "not-implies",
            Rule::NotNot => "not-not",
            Rule::Or => "or",
            Rule::NotAnd => "not-and",
            Rule::Implies => "implies",
        }
    }

    pub fn is_branching(self) -> bool {
        matches!(self, Rule::Or | Rule::NotAnd | Rule::Implies)
    }
}

/// The result of applying a rule to a non-literal formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    /// Components added one after another on the same branch.
    Stack(Rule, Vec<Formula>),
    /// Left and right branches.
    Split(Rule, Formula, Formula),
}

/// The rule that applies to `f`, or `None` for a literal.
pub fn expand(f: &Formula) -> Option<Expansion> {
    use Formula::*;
    let neg = |x: &Formula| Formula::not(x.clone());
    Some(match f {
        Var(_) => return None,
        And(a, b) => Expansion::Stack(Rule::And, vec![(**a).clone(), (**b).clone()]),
        Or(a, b) => Expansion::Split(Rule::Or, (**a).clone(), (**b).clone()),
        Implies(a, b) => Expansion::Split(Rule::Implies, neg(a), (**b).clone()),
        Not(inner) => match inner.as_ref() {
            Var(_) => return None,
            Not(a) => Expansion::Stack(Rule::NotNot, vec![(**a).clone()]),
            And(a, b) => Expansion::Split(Rule::NotAnd, neg(a), neg(b)),
            Or(a, b) => Expansion::Stack(Rule::NotOr, vec![neg(a), neg(b)]),
            Implies(a, b) => Expansion::Stack(Rule::NotImplies, vec![(**a).clone(), neg(b)]),
        },
    })
}

/// Whether a non-literal `f` takes a stacking rule. Agrees with [`expand`]
/// without building the components.
fn stacks(f: &Formula) -> bool {
    match f {
        Formula::And(..) => true,
        Formula::Not(inner) => matches!(inner.as_ref(), Formula::Not(_) | Formula::Or(..) | Formula::Implies(..)),
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Stacking rules before splitting rules, each in order of introduction;
    /// a closing literal pairs with its earliest complement.
    Default,
    /// Most recently introduced formula first; a closing literal pairs with
    /// its latest complement.
    Reversed,
    /// Expands every branch fully and reports every closing set obtainable by
    /// choosing one contradiction per branch.
    Exhaustive,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Default => "default",
            Strategy::Reversed => "reversed",
            Strategy::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauNode {
    pub id: NodeId,
    pub formula: Formula,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub rule: Rule,
    /// The node whose formula was expanded to produce this one.
    pub source: Option<NodeId>,
}

/// A complementary pair `V`, `~V` on one branch, in order of addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosingPair {
    pub variable: Variable,
    pub earlier: NodeId,
    pub later: NodeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchStatus {
    Open,
    Closed(ClosingPair),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    /// Node ids from the root to the leaf.
    pub nodes: Vec<NodeId>,
    pub status: BranchStatus,
    /// Every complementary pair found on the branch, one per variable. Under
    /// the early-closing strategies this is just the closing pair.
    pub pairs: Vec<ClosingPair>,
}

impl Branch {
    pub fn is_closed(&self) -> bool {
        matches!(self.status, BranchStatus::Closed(_))
    }

    pub fn leaf(&self) -> NodeId {
        *self.nodes.last().expect("branches are nonempty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    /// Closed, with every variable of `L` contradicted.
    ProvedTrue,
    /// Closed, with only some variables contradicted.
    ProvedNotFalse,
    Open,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::ProvedTrue => "PROVED_TRUE",
            Outcome::ProvedNotFalse => "PROVED_NOT_FALSE",
            Outcome::Open => "OPEN",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauResult {
    /// The formula being proved; the tree root holds its negation.
    pub formula: Formula,
    pub variables: Vec<Variable>,
    pub strategy: Strategy,
    /// Arena; `nodes[0]` is the root and `nodes[i].id == i`.
    pub nodes: Vec<TableauNode>,
    /// Leaves left to right.
    pub branches: Vec<Branch>,
    /// `None` when some branch is open.
    pub closing_set: Option<VarSet>,
    pub outcome: Outcome,
    /// Under [`Strategy::Exhaustive`], every inclusion-minimal closing set in
    /// lexicographic order. Empty otherwise.
    pub alternatives: Vec<VarSet>,
}

impl TableauResult {
    pub fn root(&self) -> &TableauNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: NodeId) -> &TableauNode {
        &self.nodes[id]
    }

    pub fn is_closed(&self) -> bool {
        self.outcome != Outcome::Open
    }
}

#[derive(Clone)]
struct BranchState {
    path: Vec<NodeId>,
    stacking: VecDeque<NodeId>,
    splitting: VecDeque<NodeId>,
    literals: Vec<(Variable, bool, NodeId)>,
    pairs: Vec<ClosingPair>,
}

struct Builder {
    strategy: Strategy,
    budget: usize,
    nodes: Vec<TableauNode>,
}

impl Builder {
    fn close_early(&self) -> bool {
        self.strategy != Strategy::Exhaustive
    }

    fn add_node(&mut self, formula: Formula, parent: Option<NodeId>, rule: Rule, source: Option<NodeId>) -> Result<NodeId> {
        if self.nodes.len() >= self.budget {
            return Err(Error::NodeBudgetExceeded(self.budget));
        }
        let id = self.nodes.len();
        self.nodes.push(TableauNode { id, formula, parent, children: Vec::new(), rule, source });
        if let Some(p) = parent {
            self.nodes[p].children.push(id);
        }
        Ok(id)
    }

    /// Appends `id` to the branch and checks it for closure.
    fn register(&self, state: &mut BranchState, id: NodeId) {
        state.path.push(id);
        let formula = &self.nodes[id].formula;
        match formula.as_literal() {
            Some((var, positive)) => {
                let mut complements =
                    state.literals.iter().filter(|(v, p, _)| v == var && *p != positive);
                let partner = match self.strategy {
                    Strategy::Reversed => complements.next_back(),
                    _ => complements.next(),
                };
                if let Some(&(_, _, earlier)) = partner {
                    if !state.pairs.iter().any(|p| p.variable == *var) {
                        state.pairs.push(ClosingPair { variable: var.clone(), earlier, later: id });
                    }
                }
                state.literals.push((var.clone(), positive, id));
            }
            None if stacks(formula) => state.stacking.push_back(id),
            None => state.splitting.push_back(id),
        }
    }

    fn next_pending(&self, state: &mut BranchState) -> Option<NodeId> {
        let reversed = self.strategy == Strategy::Reversed;
        for queue in [&mut state.stacking, &mut state.splitting] {
            let picked = if reversed { queue.pop_back() } else { queue.pop_front() };
            if picked.is_some() {
                return picked;
            }
        }
        None
    }

    fn finish(state: BranchState) -> Branch {
        let status = match state.pairs.first() {
            Some(pair) => BranchStatus::Closed(pair.clone()),
            None => BranchStatus::Open,
        };
        Branch { nodes: state.path, status, pairs: state.pairs }
    }

    fn run(mut self, formula: &Formula) -> Result<(Vec<TableauNode>, Vec<Branch>)> {
        let root = self.add_node(Formula::not(formula.clone()), None, Rule::Root, None)?;
        let mut initial = BranchState {
            path: Vec::new(),
            stacking: VecDeque::new(),
            splitting: VecDeque::new(),
            literals: Vec::new(),
            pairs: Vec::new(),
        };
        self.register(&mut initial, root);

        let mut branches = Vec::new();
        let mut work = vec![initial];
        'branches: while let Some(mut state) = work.pop() {
            loop {
                if self.close_early() && !state.pairs.is_empty() {
                    break;
                }
                let Some(source) = self.next_pending(&mut state) else { break };
                let tip = *state.path.last().expect("nonempty path");
                match expand(&self.nodes[source].formula).expect("pending formulas expand") {
                    Expansion::Stack(rule, parts) => {
                        let mut parent = tip;
                        for part in parts {
                            let id = self.add_node(part, Some(parent), rule, Some(source))?;
                            self.register(&mut state, id);
                            parent = id;
                            if self.close_early() && !state.pairs.is_empty() {
                                break;
                            }
                        }
                    }
                    Expansion::Split(rule, left, right) => {
                        let l = self.add_node(left, Some(tip), rule, Some(source))?;
                        let r = self.add_node(right, Some(tip), rule, Some(source))?;
                        let mut right_state = state.clone();
                        self.register(&mut right_state, r);
                        self.register(&mut state, l);
                        work.push(right_state);
                        work.push(state);
                        continue 'branches;
                    }
                }
            }
            branches.push(Self::finish(state));
        }
        Ok((self.nodes, branches))
    }
}

/// Drops every set that has a proper subset in `sets`, then deduplicates.
fn minimize(sets: &mut Vec<u64>) {
    sets.sort_unstable();
    sets.dedup();
    let snapshot = sets.clone();
    sets.retain(|&s| !snapshot.iter().any(|&t| t != s && t & s == t));
}

/// Inclusion-minimal unions obtainable by picking one variable per branch.
fn minimal_choices(per_branch: &[u64]) -> Vec<u64> {
    let mut current = vec![0u64];
    for &choices in per_branch {
        let mut next = Vec::with_capacity(current.len() * choices.count_ones() as usize);
        for &acc in &current {
            for bit in 0..64 {
                if choices & (1 << bit) != 0 {
                    next.push(acc | (1 << bit));
                }
            }
        }
        minimize(&mut next);
        current = next;
    }
    current.sort_by(|&a, &b| lex_cmp(a, b));
    current
}

fn mask_of(vars: &[Variable], v: &Variable) -> u64 {
    1 << vars.iter().position(|x| x == v).expect("closing variable occurs in the formula")
}

/// Builds the refutation tree for `~formula` under `strategy`.
pub fn refute(formula: &Formula, strategy: Strategy, opts: &Options) -> Result<TableauResult> {
    let variables = formula.vars();
    if variables.len() > 64 {
        return Err(Error::CapExceeded { count: variables.len(), cap: 64, what: "closing-set tracking" });
    }
    let builder = Builder { strategy, budget: opts.max_nodes, nodes: Vec::new() };
    let (nodes, branches) = builder.run(formula)?;
    let all_closed = branches.iter().all(Branch::is_closed);

    let mut alternatives = Vec::new();
    let closing_mask = if !all_closed {
        None
    } else if strategy == Strategy::Exhaustive {
        let per_branch: Vec<u64> = branches
            .iter()
            .map(|b| b.pairs.iter().fold(0, |m, p| m | mask_of(&variables, &p.variable)))
            .collect();
        let choices = minimal_choices(&per_branch);
        alternatives = choices.iter().map(|&m| VarSet::from_mask(&variables, m)).collect();
        choices.first().copied()
    } else {
        Some(branches.iter().fold(0, |m, b| match &b.status {
            BranchStatus::Closed(pair) => m | mask_of(&variables, &pair.variable),
            BranchStatus::Open => m,
        }))
    };

    let full = if variables.len() == 64 { u64::MAX } else { (1u64 << variables.len()) - 1 };
    let outcome = match closing_mask {
        None => Outcome::Open,
        Some(m) if m == full => Outcome::ProvedTrue,
        Some(_) => Outcome::ProvedNotFalse,
    };
    Ok(TableauResult {
        formula: formula.clone(),
        closing_set: closing_mask.map(|m| VarSet::from_mask(&variables, m)),
        variables,
        strategy,
        nodes,
        branches,
        outcome,
        alternatives,
    })
}

/// Every inclusion-minimal closing set obtainable by choosing, on each fully
/// expanded branch, which contradiction closes it. Empty if the tree does not
/// close.
pub fn closing_sets_all(formula: &Formula, opts: &Options) -> Result<Vec<VarSet>> {
    Ok(refute(formula, Strategy::Exhaustive, opts)?.alternatives)
}

fn label(id: NodeId) -> String {
    format!("N{}", id + 1)
}

fn node_header(node: &TableauNode) -> String {
    match node.source {
        Some(src) => format!("{} [{} from {}] {}", label(node.id), node.rule.name(), label(src), node.formula),
        None => format!("{} [{}] {}", label(node.id), node.rule.name(), node.formula),
    }
}

fn pair_text(pair: &ClosingPair) -> String {
    format!("closed on {} ({}, {})", pair.variable, label(pair.earlier), label(pair.later))
}

impl TableauResult {
    fn branch_at(&self, leaf: NodeId) -> Option<&Branch> {
        self.branches.iter().find(|b| b.leaf() == leaf)
    }

    /// One node per line, indented two spaces per split, followed by a
    /// summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(0usize, 0usize)];
        while let Some((id, depth)) = stack.pop() {
            let node = &self.nodes[id];
            let indent = "  ".repeat(depth);
            out.push_str(&format!("{indent}{}\n", node_header(node)));
            match node.children.as_slice() {
                [] => match self.branch_at(id).map(|b| &b.status) {
                    Some(BranchStatus::Closed(pair)) => out.push_str(&format!("{indent}× {}\n", pair_text(pair))),
                    _ => out.push_str(&format!("{indent}○ open\n")),
                },
                [only] => stack.push((*only, depth)),
                children => {
                    for &c in children.iter().rev() {
                        stack.push((c, depth + 1));
                    }
                }
            }
        }
        out.push_str(&format!("strategy: {}\n", self.strategy));
        out.push_str(&format!("outcome: {}\n", self.outcome));
        if let Some(set) = &self.closing_set {
            out.push_str(&format!("closing set: {set}\n"));
        }
        if self.strategy == Strategy::Exhaustive && self.is_closed() {
            let sets: Vec<String> = self.alternatives.iter().map(|s| s.to_string()).collect();
            out.push_str(&format!("closing sets: {}\n", sets.join(", ")));
        }
        out
    }

    /// Graphviz digraph; closure leaves are double octagons, open leaves
    /// ellipses.
    pub fn render_dot(&self) -> String {
        fn esc(s: &str) -> String {
            s.replace('\\', "\\\\").replace('"', "\\\"")
        }
        let mut out = String::from("digraph tableau {\n  node [shape=box, fontname=\"monospace\"];\n");
        for node in &self.nodes {
            let origin = match node.source {
                Some(src) => format!("{} from {}", node.rule.name(), label(src)),
                None => node.rule.name().to_owned(),
            };
            out.push_str(&format!(
                "  n{} [label=\"{}: {}\\n[{}]\"];\n",
                node.id + 1,
                label(node.id),
                esc(&node.formula.to_string()),
                origin
            ));
        }
        for node in &self.nodes {
            for &c in &node.children {
                out.push_str(&format!("  n{} -> n{};\n", node.id + 1, c + 1));
            }
        }
        for (i, branch) in self.branches.iter().enumerate() {
            let leaf = branch.leaf() + 1;
            match &branch.status {
                BranchStatus::Closed(pair) => out.push_str(&format!(
                    "  b{} [shape=doubleoctagon, label=\"× {}\"];\n  n{leaf} -> b{};\n",
                    i + 1,
                    esc(&pair_text(pair)),
                    i + 1
                )),
                BranchStatus::Open => out.push_str(&format!(
                    "  b{} [shape=ellipse, label=\"open\"];\n  n{leaf} -> b{};\n",
                    i + 1,
                    i + 1
                )),
            }
        }
        out.push_str("}\n");
        out
    }
}
