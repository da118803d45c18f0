//! Canonical replete models, truth evaluation, and the nonmonotonic
//! entailment relation.
//!
//! The canonical model over a vocabulary realizes every valuation exactly
//! once, so every PL-consistent Boolean formula has a witness world and the
//! model is replete by construction. Truth of every connective depends only
//! on the set of realized valuations and on the rule sets, so all replete
//! models over a fixed vocabulary agree on all queries and the canonical
//! model decides replete-mode entailment. The all-models mode instead
//! quantifies over every nonempty subset of valuations, with the orderings
//! restricted per submodel; it is stricter for conditional queries and is
//! provided as an oracle for tiny vocabularies.

use crate::formula::{AlethicFormula, BoolFormula, HasAtoms, Query};
use crate::ideality::IdealityOrder;
use crate::normality::{NormalityOrder, NormalityTuple};
use crate::norms::{incoherent_subset, DefeatGraph, NormsError, Theory};
use crate::prop::{eval_bool, PropError, Valuation, Vocabulary};
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest vocabulary admitted by the all-models mode.
pub const MAX_ALL_MODELS_ATOMS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("the normality conditionals are incoherent (witness rules {witness:?}); pass the override to proceed")]
    Incoherent { witness: Vec<usize> },
    #[error("all-models mode supports at most {max} atoms, got {atoms}")]
    ResourceLimit { atoms: usize, max: usize },
    #[error(transparent)]
    Prop(#[from] PropError),
}

impl From<NormsError> for ModelError {
    fn from(err: NormsError) -> Self {
        match err {
            NormsError::Prop(p) => ModelError::Prop(p),
            NormsError::KindMismatch => {
                unreachable!("theory slots are kind-checked on construction")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Admit incoherent normality sets; the fixpoint residue then shows up
    /// as an extra leading tuple coordinate.
    pub allow_incoherent: bool,
}

/// How entailment quantifies over models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntailmentMode {
    /// Quantify over replete models, decided on the canonical model.
    Replete,
    /// Quantify over every nonempty subset of valuations.
    AllModels,
}

/// The canonical model: all valuations over the vocabulary, with the
/// falsification set, violation set, and normality tuple cached per world.
#[derive(Debug, Clone)]
pub struct CanonicalModel {
    theory: Theory,
    normality: NormalityOrder,
    ideality: IdealityOrder,
    falsification: Vec<BTreeSet<usize>>,
    violation: Vec<BTreeSet<usize>>,
    tuples: Vec<NormalityTuple>,
}

impl CanonicalModel {
    pub fn build(theory: &Theory, opts: &BuildOptions) -> Result<Self, ModelError> {
        if !opts.allow_incoherent {
            if let Some(witness) = incoherent_subset(theory.r_norm()) {
                return Err(ModelError::Incoherent { witness });
            }
        }
        let normality = NormalityOrder::new(theory.r_norm());
        let graph = DefeatGraph::build(theory);
        let ideality = IdealityOrder::new(theory.r_oblig(), graph);
        let vocab = theory.vocab();
        let mut falsification = Vec::with_capacity(vocab.world_count());
        let mut violation = Vec::with_capacity(vocab.world_count());
        let mut tuples = Vec::with_capacity(vocab.world_count());
        for w in vocab.worlds() {
            let f = crate::normality::falsification_set(w, theory.r_norm(), vocab);
            tuples.push(normality.partition().tuple_of(&f));
            falsification.push(f);
            violation.push(ideality.violation_set(w, vocab));
        }
        Ok(CanonicalModel {
            theory: theory.clone(),
            normality,
            ideality,
            falsification,
            violation,
            tuples,
        })
    }

    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn vocab(&self) -> &Vocabulary {
        self.theory.vocab()
    }

    pub fn normality(&self) -> &NormalityOrder {
        &self.normality
    }

    pub fn ideality(&self) -> &IdealityOrder {
        &self.ideality
    }

    pub fn defeat_graph(&self) -> &DefeatGraph {
        self.ideality.graph()
    }

    pub fn worlds(&self) -> Vec<Valuation> {
        self.vocab().worlds().collect()
    }

    pub fn label(&self, world: Valuation) -> String {
        self.vocab().label(world)
    }

    pub fn falsification(&self, world: Valuation) -> &BTreeSet<usize> {
        &self.falsification[world.0 as usize]
    }

    pub fn violation(&self, world: Valuation) -> &BTreeSet<usize> {
        &self.violation[world.0 as usize]
    }

    pub fn tuple(&self, world: Valuation) -> &NormalityTuple {
        &self.tuples[world.0 as usize]
    }

    /// Normality comparison through the cached tuples.
    pub fn normality_geq(&self, w1: Valuation, w2: Valuation) -> bool {
        self.tuple(w1).lex_geq(self.tuple(w2))
    }

    /// Ideality comparison through the cached violation sets.
    pub fn ideality_geq(&self, w1: Valuation, w2: Valuation) -> bool {
        self.violation(w1).is_subset(self.violation(w2))
    }

    /// The normality order is total, so the maximal members are exactly the
    /// best tuple class: a single scan instead of pairwise comparison.
    pub fn max_normal(&self, worlds: &[Valuation]) -> Vec<Valuation> {
        let best = match worlds.iter().map(|&w| self.tuple(w).counts()).min() {
            Some(best) => best,
            None => return Vec::new(),
        };
        worlds
            .iter()
            .copied()
            .filter(|&w| self.tuple(w).counts() == best)
            .collect()
    }

    pub fn max_ideal(&self, worlds: &[Valuation]) -> Vec<Valuation> {
        crate::normality::max_by_preorder(worlds, |a, b| self.ideality_geq(a, b))
    }

    pub fn lifted_geq(&self, us: &[Valuation], vs: &[Valuation]) -> bool {
        vs.iter()
            .all(|&v| us.iter().any(|&u| self.ideality_geq(u, v)))
    }

    /// The worlds of `scope` satisfying a Boolean formula.
    pub fn truth_set_in(&self, formula: &BoolFormula, scope: &[Valuation]) -> Vec<Valuation> {
        scope
            .iter()
            .copied()
            .filter(|&w| eval_bool(formula, w, self.vocab()))
            .collect()
    }

    pub fn truth_set(&self, formula: &BoolFormula) -> Vec<Valuation> {
        self.truth_set_in(formula, &self.worlds())
    }

    /// Truth of a flat alethic formula at `world`, quantifying over `scope`.
    pub fn eval_alethic_in(
        &self,
        formula: &AlethicFormula,
        world: Valuation,
        scope: &[Valuation],
    ) -> bool {
        match formula {
            AlethicFormula::Bool(b) => eval_bool(b, world, self.vocab()),
            AlethicFormula::Nec(b) => scope.iter().all(|&w| eval_bool(b, w, self.vocab())),
            AlethicFormula::Poss(b) => scope.iter().any(|&w| eval_bool(b, w, self.vocab())),
            AlethicFormula::Not(inner) => !self.eval_alethic_in(inner, world, scope),
            AlethicFormula::And(a, b) => {
                self.eval_alethic_in(a, world, scope) && self.eval_alethic_in(b, world, scope)
            }
            AlethicFormula::Or(a, b) => {
                self.eval_alethic_in(a, world, scope) || self.eval_alethic_in(b, world, scope)
            }
            AlethicFormula::Implies(a, b) => {
                !self.eval_alethic_in(a, world, scope) || self.eval_alethic_in(b, world, scope)
            }
            AlethicFormula::Iff(a, b) => {
                self.eval_alethic_in(a, world, scope) == self.eval_alethic_in(b, world, scope)
            }
        }
    }

    pub fn eval_alethic(&self, formula: &AlethicFormula, world: Valuation) -> bool {
        self.eval_alethic_in(formula, world, &self.worlds())
    }

    /// Truth of `body => head` in a scope: all maximally normal body-worlds
    /// satisfy the head.
    pub fn holds_normality_in(
        &self,
        body: &BoolFormula,
        head: &BoolFormula,
        scope: &[Valuation],
    ) -> bool {
        let best = self.max_normal(&self.truth_set_in(body, scope));
        best.iter().all(|&w| eval_bool(head, w, self.vocab()))
    }

    /// Truth of `O(head|body)`: the most normal body-and-not-head worlds are
    /// not collectively at least as good as the most normal body-and-head
    /// worlds.
    pub fn holds_obligation_in(
        &self,
        body: &BoolFormula,
        head: &BoolFormula,
        scope: &[Valuation],
    ) -> bool {
        let (with_head, without_head) = self.obligation_sides(body, head, scope);
        !self.lifted_geq(&without_head, &with_head)
    }

    /// The derived formulation: some most normal body-and-head world is
    /// weakly dominated by no most normal body-and-not-head world. Agrees
    /// with [`CanonicalModel::holds_obligation_in`] on every input.
    pub fn holds_obligation_derived_in(
        &self,
        body: &BoolFormula,
        head: &BoolFormula,
        scope: &[Valuation],
    ) -> bool {
        let (with_head, without_head) = self.obligation_sides(body, head, scope);
        with_head
            .iter()
            .any(|&v| without_head.iter().all(|&u| !self.ideality_geq(u, v)))
    }

    fn obligation_sides(
        &self,
        body: &BoolFormula,
        head: &BoolFormula,
        scope: &[Valuation],
    ) -> (Vec<Valuation>, Vec<Valuation>) {
        let with_head = self.truth_set_in(&body.clone().and(head.clone()), scope);
        let without_head = self.truth_set_in(&body.clone().and(head.clone().not()), scope);
        (self.max_normal(&with_head), self.max_normal(&without_head))
    }

    /// Truth of `OH(head|body)`: all maximally good body-worlds satisfy the
    /// head.
    pub fn holds_hansson_in(
        &self,
        body: &BoolFormula,
        head: &BoolFormula,
        scope: &[Valuation],
    ) -> bool {
        let best = self.max_ideal(&self.truth_set_in(body, scope));
        best.iter().all(|&w| eval_bool(head, w, self.vocab()))
    }

    /// Truth of a query at a world, quantifying over `scope`.
    pub fn eval_in(&self, query: &Query, world: Valuation, scope: &[Valuation]) -> bool {
        match query {
            Query::Alethic(f) => self.eval_alethic_in(f, world, scope),
            Query::Normality { body, head } => self.holds_normality_in(body, head, scope),
            Query::Obligation { body, head } => self.holds_obligation_in(body, head, scope),
            Query::ObligationHansson { body, head } => self.holds_hansson_in(body, head, scope),
        }
    }

    /// Truth of a query at a world of the canonical model. The query must
    /// only mention vocabulary atoms (use [`entails`] otherwise).
    pub fn eval(&self, query: &Query, world: Valuation) -> bool {
        self.eval_in(query, world, &self.worlds())
    }

    /// The worlds where every member of the theory's hard information holds.
    pub fn gamma_worlds_in(&self, scope: &[Valuation]) -> Vec<Valuation> {
        scope
            .iter()
            .copied()
            .filter(|&w| {
                self.theory
                    .gamma()
                    .iter()
                    .all(|g| self.eval_alethic_in(g, w, scope))
            })
            .collect()
    }
}

/// Conditional and modal queries never depend on the evaluation world.
pub fn is_world_independent(query: &Query) -> bool {
    fn alethic(f: &AlethicFormula) -> bool {
        match f {
            AlethicFormula::Bool(_) => false,
            AlethicFormula::Nec(_) | AlethicFormula::Poss(_) => true,
            AlethicFormula::Not(inner) => alethic(inner),
            AlethicFormula::And(a, b)
            | AlethicFormula::Or(a, b)
            | AlethicFormula::Implies(a, b)
            | AlethicFormula::Iff(a, b) => alethic(a) && alethic(b),
        }
    }
    match query {
        Query::Alethic(f) => alethic(f),
        _ => true,
    }
}

/// A world (or submodel plus world) certifying a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    World {
        world: Valuation,
        label: String,
    },
    SubModel {
        worlds: Vec<String>,
        world: Valuation,
        label: String,
    },
}

impl Witness {
    pub fn label(&self) -> &str {
        match self {
            Witness::World { label, .. } => label,
            Witness::SubModel { label, .. } => label,
        }
    }

    pub fn world(&self) -> Valuation {
        match self {
            Witness::World { world, .. } => *world,
            Witness::SubModel { world, .. } => *world,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Witness::World { label, .. } => label.clone(),
            Witness::SubModel { worlds, label, .. } => {
                format!("{label} in submodel {{{}}}", worlds.join(", "))
            }
        }
    }
}

/// An entailment verdict together with the witness world that explains it.
///
/// For obligation queries a witness is attached to both verdicts: when
/// entailed, a most normal body-and-head world dominated by no most normal
/// body-and-not-head world; when not entailed, a body-and-not-head world
/// that dominates the best candidate. Other queries carry a witness only on
/// failure: a world where the hard information holds but the query fails
/// (for conditionals, a maximally normal or ideal counterexample world).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub entailed: bool,
    pub witness: Option<Witness>,
}

/// Does the theory entail the query?
///
/// The vocabulary is extended with the query's atoms first, so fresh atoms
/// trigger a model rebuild rather than an error.
pub fn entails(
    theory: &Theory,
    query: &Query,
    mode: EntailmentMode,
    opts: &BuildOptions,
) -> Result<Verdict, ModelError> {
    let extended = theory.clone().with_declared_atoms(query.atoms())?;
    let model = CanonicalModel::build(&extended, opts)?;
    match mode {
        EntailmentMode::Replete => Ok(entails_replete(&model, query)),
        EntailmentMode::AllModels => entails_all_models(&model, query),
    }
}

fn entails_replete(model: &CanonicalModel, query: &Query) -> Verdict {
    let scope = model.worlds();
    let gamma_worlds = model.gamma_worlds_in(&scope);
    if gamma_worlds.is_empty() {
        return Verdict {
            entailed: true,
            witness: None,
        };
    }
    if let Query::Obligation { body, head } = query {
        let entailed = model.holds_obligation_in(body, head, &scope);
        let witness = obligation_witness(model, body, head, &scope, entailed);
        return Verdict { entailed, witness };
    }
    if is_world_independent(query) {
        let entailed = model.eval_in(query, scope[0], &scope);
        let witness = if entailed {
            None
        } else {
            counterexample_witness(model, query, &scope)
        };
        Verdict { entailed, witness }
    } else {
        match gamma_worlds
            .iter()
            .find(|&&w| !model.eval_in(query, w, &scope))
        {
            None => Verdict {
                entailed: true,
                witness: None,
            },
            Some(&w) => Verdict {
                entailed: false,
                witness: Some(Witness::World {
                    world: w,
                    label: model.label(w),
                }),
            },
        }
    }
}

/// For an entailed obligation, a most normal body-and-head world that no
/// most normal body-and-not-head world weakly dominates; for a failed one,
/// the dominating world that spoils the best candidate. Candidates are
/// searched among the maximally good members of the most normal
/// body-and-head worlds, which suffices: any undominated world is weakly
/// below an undominated maximally good one.
fn obligation_witness(
    model: &CanonicalModel,
    body: &BoolFormula,
    head: &BoolFormula,
    scope: &[Valuation],
    entailed: bool,
) -> Option<Witness> {
    let with_head = model.max_normal(&model.truth_set_in(&body.clone().and(head.clone()), scope));
    let without_head =
        model.max_normal(&model.truth_set_in(&body.clone().and(head.clone().not()), scope));
    let candidates = model.max_ideal(&with_head);
    if entailed {
        let world = candidates
            .iter()
            .copied()
            .find(|&v| without_head.iter().all(|&u| !model.ideality_geq(u, v)))?;
        Some(Witness::World {
            world,
            label: model.label(world),
        })
    } else {
        let best = *candidates.first()?;
        let world = without_head
            .iter()
            .copied()
            .find(|&u| model.ideality_geq(u, best))?;
        Some(Witness::World {
            world,
            label: model.label(world),
        })
    }
}

fn counterexample_witness(
    model: &CanonicalModel,
    query: &Query,
    scope: &[Valuation],
) -> Option<Witness> {
    let vocab = model.vocab();
    let world = match query {
        Query::Normality { body, head } => model
            .max_normal(&model.truth_set_in(body, scope))
            .into_iter()
            .find(|&w| !eval_bool(head, w, vocab)),
        Query::ObligationHansson { body, head } => model
            .max_ideal(&model.truth_set_in(body, scope))
            .into_iter()
            .find(|&w| !eval_bool(head, w, vocab)),
        _ => model.gamma_worlds_in(scope).into_iter().next(),
    }?;
    Some(Witness::World {
        world,
        label: model.label(world),
    })
}

fn entails_all_models(model: &CanonicalModel, query: &Query) -> Result<Verdict, ModelError> {
    let vocab = model.vocab();
    if vocab.len() > MAX_ALL_MODELS_ATOMS {
        return Err(ModelError::ResourceLimit {
            atoms: vocab.len(),
            max: MAX_ALL_MODELS_ATOMS,
        });
    }
    let all = model.worlds();
    for mask in 1u64..(1 << all.len()) {
        let scope: Vec<Valuation> = all
            .iter()
            .copied()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, w)| w)
            .collect();
        for &w in &model.gamma_worlds_in(&scope) {
            if !model.eval_in(query, w, &scope) {
                let worlds = scope.iter().map(|&v| model.label(v)).collect();
                return Ok(Verdict {
                    entailed: false,
                    witness: Some(Witness::SubModel {
                        worlds,
                        world: w,
                        label: model.label(w),
                    }),
                });
            }
        }
    }
    // The canonical model is one of the submodels quantified over, so an
    // all-models entailment must hold in replete mode too.
    debug_assert!(entails_replete(model, query).entailed);
    Ok(Verdict {
        entailed: true,
        witness: None,
    })
}
