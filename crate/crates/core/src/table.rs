//! Truth-table generation and TSV rendering.

use serde::{Deserialize, Serialize};

use crate::assignment::Assignment;
use crate::error::Result;
use crate::eval::{decode_row, Program};
use crate::formula::{Formula, Variable};
use crate::options::Options;
use crate::par;
use crate::value::TruthValue;
use crate::varset::VarSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableMode {
    /// All `2^n` definite assignments.
    Classical,
    /// All `3^n` assignments.
    Three,
    /// The varied variables range over `{T, F}`, the rest are pinned to `X`.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    /// Values of [`TruthTable::variables`], positionally.
    pub values: Vec<TruthValue>,
    pub value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub formula: Formula,
    pub variables: Vec<Variable>,
    pub mode: TableMode,
    /// The variables that range over values; all of them except in
    /// partial mode.
    pub varied: VarSet,
    pub rows: Vec<Row>,
}

impl TruthTable {
    pub fn assignment(&self, row: &Row) -> Assignment {
        Assignment::from_values(&self.variables, &row.values)
    }

    /// Tab-separated rendering: a header of variable names then `value`, one
    /// line per row, unknown rendered as `x`. With `steps`, a column per
    /// connective is inserted before `value`, in the left-to-right order the
    /// connectives are written.
    pub fn render_tsv(&self, steps: bool) -> String {
        let columns = if steps { connective_columns(&self.formula) } else { Vec::new() };
        let mut out = String::new();
        let mut header: Vec<String> = self.variables.iter().map(|v| v.name().to_owned()).collect();
        header.extend(columns.iter().map(|c| c.to_string()));
        header.push("value".to_owned());
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in &self.rows {
            let mut cells: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
            if steps {
                let (_, values) = connective_values(&self.formula, &self.variables, &row.values);
                cells.extend(values.iter().map(|v| v.to_string()));
            }
            cells.push(row.value.to_string());
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// Builds the table for `f`.
///
/// `varied` is only consulted in [`TableMode::Partial`]; it must be a subset
/// of `f.vars()`.
pub fn table(f: &Formula, mode: TableMode, varied: &VarSet, opts: &Options) -> Result<TruthTable> {
    let program = Program::compile(f);
    let variables = program.vars().to_vec();
    let n = variables.len();
    let (varied, rows) = match mode {
        TableMode::Classical => {
            opts.check_two(n)?;
            let rows = par::map_range(opts.exec, 1 << n, |r| {
                let values = decode_row(r, n, &TruthValue::DEFINITE);
                let value = program.eval(&values);
                Row { values, value }
            });
            (VarSet::all(&variables), rows)
        }
        TableMode::Three => {
            opts.check_three(n)?;
            let count = 3u64.pow(n as u32);
            let rows = par::map_range(opts.exec, count, |r| {
                let values = decode_row(r, n, &TruthValue::ALL);
                let value = program.eval(&values);
                Row { values, value }
            });
            (VarSet::all(&variables), rows)
        }
        TableMode::Partial => {
            let mask = varied.to_mask(&variables)?;
            let k = mask.count_ones() as usize;
            opts.check_two(k)?;
            let positions: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let rows = par::map_range(opts.exec, 1 << k, |r| {
                let digits = decode_row(r, k, &TruthValue::DEFINITE);
                let mut values = vec![TruthValue::X; n];
                for (&pos, d) in positions.iter().zip(digits) {
                    values[pos] = d;
                }
                let value = program.eval(&values);
                Row { values, value }
            });
            (VarSet::from_mask(&variables, mask), rows)
        }
    };
    Ok(TruthTable { formula: f.clone(), variables, mode, varied, rows })
}

/// Compound subformulas in the order their main connective is written:
/// a negation before its operand, a binary connective between its operands.
pub fn connective_columns(f: &Formula) -> Vec<Formula> {
    fn go(f: &Formula, out: &mut Vec<Formula>) {
        match f {
            Formula::Var(_) => {}
            Formula::Not(a) => {
                out.push(f.clone());
                go(a, out);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                go(a, out);
                out.push(f.clone());
                go(b, out);
            }
        }
    }
    let mut out = Vec::new();
    go(f, &mut out);
    out
}

/// Value of `f` together with the value under each connective, in the order of
/// [`connective_columns`].
pub fn connective_values(
    f: &Formula,
    vars: &[Variable],
    values: &[TruthValue],
) -> (TruthValue, Vec<TruthValue>) {
    fn go(f: &Formula, vars: &[Variable], values: &[TruthValue], out: &mut Vec<TruthValue>) -> TruthValue {
        match f {
            Formula::Var(v) => {
                let i = vars.iter().position(|x| x == v).expect("variable in table");
                values[i]
            }
            Formula::Not(a) => {
                let slot = out.len();
                out.push(TruthValue::X);
                let r = go(a, vars, values, out).not();
                out[slot] = r;
                r
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                let x = go(a, vars, values, out);
                let slot = out.len();
                out.push(TruthValue::X);
                let y = go(b, vars, values, out);
                let r = match f {
                    Formula::And(..) => x.and(y),
                    Formula::Or(..) => x.or(y),
                    _ => x.implies(y),
                };
                out[slot] = r;
                r
            }
        }
    }
    let mut out = Vec::new();
    let value = go(f, vars, values, &mut out);
    (value, out)
}
