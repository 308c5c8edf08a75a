//! Truth-relevant propositional logic.
//!
//! Formulas are evaluated with Kleene's strong three-valued tables. On top of
//! that sit truth-determining sets and truth-redundant variables, a
//! refutation tableau that reports which variables close its branches, and an
//! exhaustive checker comparing a formula with a conjunction of
//! excluded-middle instances.
//!
//! ```
//! use trel_core::{analyze, parse, Classification, Options};
//!
//! let peirce = parse("((A -> B) -> A) -> A").unwrap();
//! let report = analyze(&peirce, &Options::default()).unwrap();
//! assert_eq!(report.classification, Classification::TautologyNotTRelevant);
//! assert_eq!(report.redundant.to_string(), "{B}");
//! ```

pub mod assignment;
pub mod error;
pub mod eval;
pub mod formula;
pub mod options;
pub mod par;
pub mod parser;
pub mod relevance;
pub mod table;
pub mod tableau;
pub mod theorem;
pub mod value;
pub mod varset;

pub use assignment::Assignment;
pub use error::{Error, Result};
pub use eval::{eval2, eval3, is_tautology, Program};
pub use formula::{Formula, SourceSpan, Variable};
pub use options::{Exec, Options};
pub use parser::{parse, ParseError};
pub use relevance::{analyze, is_determining, is_redundant, Classification, RelevanceReport};
pub use table::{table, TableMode, TruthTable};
pub use tableau::{closing_sets_all, refute, Outcome, Strategy, TableauResult};
pub use theorem::{
    canonical_value, check_equivalence, negated_form, CanonicalConjunction, EquivalenceVerdict,
    Witness,
};
pub use value::TruthValue;
pub use varset::VarSet;
