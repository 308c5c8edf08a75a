//! Strong-table and classical evaluation.
//!
//! [`eval3`] walks the tree directly. Enumeration-heavy code compiles the
//! formula into a [`Program`] over variable indices instead; the two must agree
//! row for row, which the tests below and the property suites check.

use crate::assignment::Assignment;
use crate::error::{Error, Result};
use crate::formula::{Formula, Variable};
use crate::options::Options;
use crate::par;
use crate::value::TruthValue;

/// Evaluates `f` bottom-up with the strong tables.
///
/// Fails if `a` has no value for some variable of `f`. Extra variables in `a`
/// are ignored.
pub fn eval3(f: &Formula, a: &Assignment) -> Result<TruthValue> {
    Ok(match f {
        Formula::Var(v) => a.value_of(v)?,
        Formula::Not(x) => eval3(x, a)?.not(),
        Formula::And(x, y) => eval3(x, a)?.and(eval3(y, a)?),
        Formula::Or(x, y) => eval3(x, a)?.or(eval3(y, a)?),
        Formula::Implies(x, y) => eval3(x, a)?.implies(eval3(y, a)?),
    })
}

/// Classical evaluation; rejects assignments that leave a variable of `f`
/// unknown.
pub fn eval2(f: &Formula, a: &Assignment) -> Result<TruthValue> {
    fn go(f: &Formula, a: &Assignment) -> Result<bool> {
        Ok(match f {
            Formula::Var(v) => match a.value_of(v)?.to_bool() {
                Some(b) => b,
                None => return Err(Error::IndefiniteAssignment(v.name().to_owned())),
            },
            Formula::Not(x) => !go(x, a)?,
            Formula::And(x, y) => go(x, a)? & go(y, a)?,
            Formula::Or(x, y) => go(x, a)? | go(y, a)?,
            Formula::Implies(x, y) => !go(x, a)? | go(y, a)?,
        })
    }
    go(f, a).map(TruthValue::from_bool)
}

/// True iff `f` is classically `T` on all `2^n` definite assignments.
pub fn is_tautology(f: &Formula, opts: &Options) -> Result<bool> {
    let program = Program::compile(f);
    let n = program.vars().len();
    opts.check_two(n)?;
    let counterexample = par::find_first(opts.exec, 1 << n, |row| {
        let values = decode_row(row, n, &TruthValue::DEFINITE);
        program.eval(&values) != TruthValue::T
    });
    Ok(counterexample.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Load(usize),
    Not,
    And,
    Or,
    Implies,
}

/// A formula flattened to postfix over indices into [`Formula::vars`].
#[derive(Debug, Clone)]
pub struct Program {
    vars: Vec<Variable>,
    ops: Vec<Op>,
    depth: usize,
}

impl Program {
    pub fn compile(f: &Formula) -> Self {
        let vars = f.vars();
        let mut ops = Vec::with_capacity(f.size());
        emit(f, &vars, &mut ops);
        let mut depth = 0usize;
        let mut max = 0usize;
        for op in &ops {
            match op {
                Op::Load(_) => depth += 1,
                Op::Not => {}
                _ => depth -= 1,
            }
            max = max.max(depth);
        }
        Program { vars, ops, depth: max }
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    /// `values[i]` is the value of `self.vars()[i]`.
    pub fn eval(&self, values: &[TruthValue]) -> TruthValue {
        let mut stack = Vec::with_capacity(self.depth);
        for op in &self.ops {
            match *op {
                Op::Load(i) => stack.push(values[i]),
                Op::Not => {
                    let a = stack.pop().unwrap();
                    stack.push(a.not());
                }
                binary => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    stack.push(match binary {
                        Op::And => a.and(b),
                        Op::Or => a.or(b),
                        _ => a.implies(b),
                    });
                }
            }
        }
        stack.pop().unwrap()
    }

    /// Evaluates with the variables whose bit is set in `mask` taken from
    /// `row` (a binary counter over those variables, first one most
    /// significant) and every other variable pinned to `X`.
    pub(crate) fn eval_partial(&self, mask: u64, row: u64) -> TruthValue {
        let n = self.vars.len();
        let k = mask.count_ones();
        let mut values = vec![TruthValue::X; n];
        let mut pos = 0;
        for (i, slot) in values.iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                let bit = (row >> (k - 1 - pos)) & 1;
                *slot = if bit == 0 { TruthValue::T } else { TruthValue::F };
                pos += 1;
            }
        }
        self.eval(&values)
    }
}

fn emit(f: &Formula, vars: &[Variable], ops: &mut Vec<Op>) {
    match f {
        Formula::Var(v) => {
            let i = vars.iter().position(|x| x == v).expect("vars() covers every leaf");
            ops.push(Op::Load(i));
        }
        Formula::Not(a) => {
            emit(a, vars, ops);
            ops.push(Op::Not);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            emit(a, vars, ops);
            emit(b, vars, ops);
            ops.push(match f {
                Formula::And(..) => Op::And,
                Formula::Or(..) => Op::Or,
                _ => Op::Implies,
            });
        }
    }
}

/// Row `row` of an enumeration over `n` columns drawing from `digits`, with
/// the first column most significant. With `digits = [T, F, X]` rows come out
/// in lexicographic `T < F < X` order.
pub fn decode_row(row: u64, n: usize, digits: &[TruthValue]) -> Vec<TruthValue> {
    let base = digits.len() as u64;
    let mut out = vec![TruthValue::X; n];
    let mut rest = row;
    for slot in out.iter_mut().rev() {
        *slot = digits[(rest % base) as usize];
        rest /= base;
    }
    out
}
