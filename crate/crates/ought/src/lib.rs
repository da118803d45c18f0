//! A reasoning engine for defeasible conditional obligations.
//!
//! Theories pair hard information with two finite rule sets: soft normality
//! conditionals (`B => H`, "if B then normally H") and conditional
//! obligations (`O(H|B)`, "H is obligatory given B"). Worlds are ranked
//! twice: a lexicographic normality ordering scores falsified conditionals
//! by specificity, and an ideality ordering compares violated obligations
//! by set inclusion, excusing an obligation whose more specific overriding
//! obligation is triggered and complied with. Conditional obligations are
//! evaluated against the most normal antecedent worlds under a set-lifted
//! comparison of the two sides, which tolerates unresolved conflicts, and
//! the entailment relation these models induce is nonmonotonic: adding
//! rules can retract conclusions.
//!
//! The [`iol`] module implements constrained input/output logic as an
//! independent engine, together with the translation of obligations into
//! norms with defeater-strengthened bodies; [`iol::faithfulness_check`]
//! replays the correspondence between the two engines on concrete queries.
//!
//! Entry points:
//! - [`cli::load_theory_file`] and the `ought` binary for the file-based
//!   surface;
//! - [`model::entails`] for programmatic queries;
//! - the `examples/` directory for one runnable walk-through per
//!   capability.
//!
//! ```
//! use ought::{entails, parse_query, parse_rule, Theory};
//! use ought::{BuildOptions, EntailmentMode};
//!
//! let theory = Theory::new(
//!     vec![],
//!     vec![parse_rule("true => ~a")?, parse_rule("r => a")?],
//!     vec![parse_rule("O(~f)")?, parse_rule("O(f|a)")?, parse_rule("O(n)")?],
//! )?;
//! let napkin = parse_query("O(n|a)")?;
//! let verdict = entails(&theory, &napkin, EntailmentMode::Replete, &BuildOptions::default())?;
//! assert!(verdict.entailed);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cli;
pub mod formula;
pub mod gen;
pub mod ideality;
pub mod iol;
pub mod model;
pub mod normality;
pub mod norms;
pub mod prop;

pub use formula::{
    parse_alethic, parse_boolean, parse_query, parse_rule, AlethicFormula, BoolFormula, Query,
    Rule, RuleKind,
};
pub use model::{entails, BuildOptions, CanonicalModel, EntailmentMode, Verdict, Witness};
pub use norms::{contained_in, DefeatGraph, Theory};
