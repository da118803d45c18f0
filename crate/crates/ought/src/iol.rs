//! Constrained input/output logic, independent of the preference engine.
//!
//! Norms are body/head pairs of Boolean formulas. The underlying operation
//! is the reusable throughput operation with identity, whose membership
//! question collapses into classical logic: `x` is output under norms `N`
//! and input `a` exactly when `{a}` plus the materialization of `N` entails
//! `x`. Excess output is filtered by cutting the norm set back to its
//! maximal subsets whose output stays consistent with the input (the
//! constraint set is fixed to the input itself), and intersecting the
//! outputs of those subsets.
//!
//! Obligations translate to norms by strengthening each body with the
//! negated bodies of the rule's defeaters; [`faithfulness_check`] replays
//! the correspondence between this translation and the preference-based
//! engine on concrete inputs.

use crate::formula::{BoolFormula, Query};
use crate::model::{entails, BuildOptions, CanonicalModel, EntailmentMode, ModelError};
use crate::norms::{DefeatGraph, Theory};
use crate::prop::{eval_bool, pl_consistent, pl_entails};
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IolError {
    #[error("the input formula is PL-inconsistent")]
    InconsistentInput,
    #[error("the faithfulness check requires an empty normality set")]
    NormalityRulesPresent,
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A conditional norm `(body, head)`, both purely Boolean.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IOPair {
    pub body: BoolFormula,
    pub head: BoolFormula,
}

impl IOPair {
    pub fn new(body: BoolFormula, head: BoolFormula) -> Self {
        IOPair { body, head }
    }

    pub fn materialize(&self) -> BoolFormula {
        self.body.clone().implies(self.head.clone())
    }
}

impl std::fmt::Display for IOPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.body, self.head)
    }
}

/// Is `head` in the reusable-throughput output of `norms` under `input`?
pub fn out4plus_contains<'a>(
    norms: impl IntoIterator<Item = &'a IOPair>,
    input: &BoolFormula,
    head: &BoolFormula,
) -> bool {
    let mats: Vec<BoolFormula> = norms.into_iter().map(IOPair::materialize).collect();
    pl_entails(std::iter::once(input).chain(mats.iter()), head)
}

/// The maximal norm subsets whose output is consistent with the input,
/// as index sets in canonical (bitmask) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFamily {
    members: Vec<BTreeSet<usize>>,
}

impl MaxFamily {
    pub fn members(&self) -> &[BTreeSet<usize>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Top-down search over the subset lattice with memoized consistency
/// checks: start from the full set; an inconsistent set expands into its
/// one-smaller subsets, a consistent one is maximal unless it sits below an
/// already accepted set.
pub fn maxfamily(norms: &[IOPair], input: &BoolFormula) -> Result<MaxFamily, IolError> {
    if !pl_consistent([input]) {
        return Err(IolError::InconsistentInput);
    }
    debug_assert!(norms.len() < 32);
    let full: u32 = if norms.is_empty() {
        0
    } else {
        (1u32 << norms.len()) - 1
    };
    let consistent = |mask: u32| -> bool {
        let mats: Vec<BoolFormula> = (0..norms.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| norms[i].materialize())
            .collect();
        pl_consistent(std::iter::once(input).chain(mats.iter()))
    };
    let mut maximal: Vec<u32> = Vec::new();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut queue: VecDeque<u32> = VecDeque::from([full]);
    while let Some(mask) = queue.pop_front() {
        if !seen.insert(mask) {
            continue;
        }
        if maximal.iter().any(|&m| mask & !m == 0) {
            continue; // below an accepted maximal set
        }
        if consistent(mask) {
            maximal.push(mask);
            continue;
        }
        for i in 0..norms.len() {
            if mask >> i & 1 == 1 {
                queue.push_back(mask & !(1 << i));
            }
        }
    }
    maximal.sort_unstable();
    let members = maximal
        .into_iter()
        .map(|mask| (0..norms.len()).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    Ok(MaxFamily { members })
}

/// Is `head` in the full meet constrained output: the intersection of the
/// outputs of every maximal subset?
pub fn fullmeet_contains(
    norms: &[IOPair],
    input: &BoolFormula,
    head: &BoolFormula,
) -> Result<bool, IolError> {
    let family = maxfamily(norms, input)?;
    Ok(family
        .members()
        .iter()
        .all(|member| out4plus_contains(member.iter().map(|&i| &norms[i]), input, head)))
}

/// Translate a theory's obligations into norms, strengthening each body
/// with the negated bodies of its defeaters, in rule-index order.
pub fn rewrite_defeaters(theory: &Theory) -> Vec<IOPair> {
    let graph = DefeatGraph::build(theory);
    rewrite_with_graph(theory, &graph)
}

pub fn rewrite_with_graph(theory: &Theory, graph: &DefeatGraph) -> Vec<IOPair> {
    theory
        .r_oblig()
        .iter()
        .enumerate()
        .map(|(i, rule)| {
            let defeaters = graph.defeaters_of(i);
            let body = if defeaters.is_empty() {
                rule.body.clone()
            } else {
                defeaters.iter().fold(rule.body.clone(), |acc, &j| {
                    acc.and(theory.r_oblig()[j].body.clone().not())
                })
            };
            IOPair::new(body, rule.head.clone())
        })
        .collect()
}

/// The two engines' verdicts on one `(input, head)` pair, plus the
/// world-level bridge between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaithfulnessReport {
    pub input: BoolFormula,
    pub head: BoolFormula,
    /// Preference side: all maximally good input-worlds satisfy the head.
    pub hansson_pref: bool,
    /// Output side: the head is in the full meet constrained output.
    pub io_member: bool,
    /// Preference side under the conflict-tolerant obligation, with the
    /// input assumed possible.
    pub exists_forall_pref: bool,
    /// The biconditional between `hansson_pref` and `io_member`.
    pub hansson_agrees: bool,
    /// Output membership implies the conflict-tolerant verdict.
    pub exists_forall_implied: bool,
    /// The converse direction failed; logged as informative, never an error.
    pub converse_gap: bool,
    /// Every world is maximally good among the input-worlds exactly when it
    /// satisfies the input and some maximal subset's materialization.
    pub bridge_ok: bool,
    /// First world violating the bridge, if any.
    pub bridge_mismatch: Option<String>,
}

impl FaithfulnessReport {
    /// Both proved directions hold; the converse gap does not count.
    pub fn passed(&self) -> bool {
        self.hansson_agrees && self.exists_forall_implied && self.bridge_ok
    }
}

/// Run both engines on `(input, head)` over a theory with no normality
/// conditionals, and compare.
pub fn faithfulness_check(
    theory: &Theory,
    input: &BoolFormula,
    head: &BoolFormula,
) -> Result<FaithfulnessReport, IolError> {
    if !theory.r_norm().is_empty() {
        return Err(IolError::NormalityRulesPresent);
    }
    if !pl_consistent([input]) {
        return Err(IolError::InconsistentInput);
    }

    let rewritten = rewrite_defeaters(theory);
    let io_member = fullmeet_contains(&rewritten, input, head)?;

    let hansson_query = Query::ObligationHansson {
        body: input.clone(),
        head: head.clone(),
    };
    let opts = BuildOptions::default();
    let hansson_pref = entails(theory, &hansson_query, EntailmentMode::Replete, &opts)?.entailed;

    let possible_input = crate::formula::AlethicFormula::Poss(input.clone());
    let mut gamma = theory.gamma().to_vec();
    gamma.push(possible_input);
    let with_possibility =
        Theory::new(gamma, Vec::new(), theory.r_oblig().to_vec()).map_err(ModelError::from)?;
    let oblig_query = Query::Obligation {
        body: input.clone(),
        head: head.clone(),
    };
    let exists_forall_pref = entails(
        &with_possibility,
        &oblig_query,
        EntailmentMode::Replete,
        &opts,
    )?
    .entailed;

    let (bridge_ok, bridge_mismatch) = bridge_identity(theory, &rewritten, input)?;

    Ok(FaithfulnessReport {
        input: input.clone(),
        head: head.clone(),
        hansson_pref,
        io_member,
        exists_forall_pref,
        hansson_agrees: hansson_pref == io_member,
        exists_forall_implied: !io_member || exists_forall_pref,
        converse_gap: exists_forall_pref && !io_member,
        bridge_ok,
        bridge_mismatch,
    })
}

/// A world is maximally good among the input-worlds iff it satisfies the
/// input together with the materialization of some maximal subset.
fn bridge_identity(
    theory: &Theory,
    rewritten: &[IOPair],
    input: &BoolFormula,
) -> Result<(bool, Option<String>), IolError> {
    let extended = theory
        .clone()
        .with_declared_atoms(crate::formula::HasAtoms::atoms(input))
        .map_err(ModelError::from)?;
    let model = CanonicalModel::build(&extended, &BuildOptions::default())?;
    let vocab = model.vocab();
    let family = maxfamily(rewritten, input)?;
    let input_worlds = model.truth_set(input);
    let best: BTreeSet<_> = model
        .ideality()
        .max_ideal(&input_worlds, vocab)
        .into_iter()
        .collect();
    for w in model.worlds() {
        let lhs = best.contains(&w);
        let rhs = eval_bool(input, w, vocab)
            && family.members().iter().any(|member| {
                member
                    .iter()
                    .all(|&i| eval_bool(&rewritten[i].materialize(), w, vocab))
            });
        if lhs != rhs {
            return Ok((false, Some(vocab.label(w))));
        }
    }
    Ok((true, None))
}
