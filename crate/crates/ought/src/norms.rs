//! Rule-set containers, the overriding (defeat) relation, and coherence.
//!
//! A theory bundles hard information with two finite rule sets: soft
//! normality conditionals and conditional obligations. Obligation `r_j`
//! overrides `r_i` when their heads are S5-inconsistent given the hard
//! information, `r_j` has a strictly more specific body, and `r_j` is not a
//! contrary-to-duty of `r_i`.

use crate::formula::{atoms_of, AlethicFormula, BoolFormula, HasAtoms, Rule, RuleKind};
use crate::prop::{pl_consistent, pl_entails, s5_consistent, PropError, Vocabulary};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormsError {
    #[error("expected an obligation rule, got a normality rule")]
    KindMismatch,
    #[error(transparent)]
    Prop(#[from] PropError),
}

/// A theory: hard information plus the two rule sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    gamma: Vec<AlethicFormula>,
    r_norm: Vec<Rule>,
    r_oblig: Vec<Rule>,
    vocab: Vocabulary,
}

impl Theory {
    /// Build a theory. Duplicate rules and facts are dropped (first
    /// occurrence wins, indices stay stable); the vocabulary is the set of
    /// atoms occurring anywhere.
    pub fn new(
        gamma: Vec<AlethicFormula>,
        r_norm: Vec<Rule>,
        r_oblig: Vec<Rule>,
    ) -> Result<Self, NormsError> {
        if r_norm.iter().any(|r| r.kind != RuleKind::Normality) {
            return Err(NormsError::KindMismatch);
        }
        if r_oblig.iter().any(|r| r.kind != RuleKind::Obligation) {
            return Err(NormsError::KindMismatch);
        }
        let gamma = dedup_stable(gamma);
        let r_norm = dedup_stable(r_norm);
        let r_oblig = dedup_stable(r_oblig);
        let mut atoms: BTreeSet<String> = BTreeSet::new();
        for g in &gamma {
            g.collect_atoms(&mut atoms);
        }
        for r in r_norm.iter().chain(r_oblig.iter()) {
            r.collect_atoms(&mut atoms);
        }
        let vocab = Vocabulary::new(atoms)?;
        Ok(Theory {
            gamma,
            r_norm,
            r_oblig,
            vocab,
        })
    }

    pub fn empty() -> Self {
        Theory::new(Vec::new(), Vec::new(), Vec::new()).expect("empty theory is well formed")
    }

    /// Declare extra vocabulary atoms beyond those occurring in the theory.
    pub fn with_declared_atoms(
        mut self,
        atoms: impl IntoIterator<Item = String>,
    ) -> Result<Self, NormsError> {
        self.vocab = self.vocab.extend(atoms)?;
        Ok(self)
    }

    pub fn gamma(&self) -> &[AlethicFormula] {
        &self.gamma
    }

    pub fn r_norm(&self) -> &[Rule] {
        &self.r_norm
    }

    pub fn r_oblig(&self) -> &[Rule] {
        &self.r_oblig
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    /// Atoms occurring in the theory's formulas (excluding declared extras).
    pub fn occurring_atoms(&self) -> Vec<String> {
        let mut atoms = BTreeSet::new();
        for g in &self.gamma {
            g.collect_atoms(&mut atoms);
        }
        for r in self.r_norm.iter().chain(self.r_oblig.iter()) {
            r.collect_atoms(&mut atoms);
        }
        atoms.into_iter().collect()
    }
}

fn dedup_stable<T: PartialEq>(items: Vec<T>) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(items.len());
    for item in items {
        if !out.contains(&item) {
            out.push(item);
        }
    }
    out
}

/// Componentwise syntactic containment between theories.
pub fn contained_in(smaller: &Theory, larger: &Theory) -> bool {
    smaller.gamma.iter().all(|g| larger.gamma.contains(g))
        && smaller.r_norm.iter().all(|r| larger.r_norm.contains(r))
        && smaller.r_oblig.iter().all(|r| larger.r_oblig.contains(r))
}

/// Does `r_j` override `r_i`, given the hard information `gamma`?
///
/// All three clauses must hold: (i) the heads are jointly S5-inconsistent
/// with `gamma`; (ii) the body of `r_j` strictly PL-entails the body of
/// `r_i`; (iii) `r_j` is not a contrary-to-duty of `r_i`, i.e. the head of
/// `r_i` is PL-consistent with the body of `r_j`.
pub fn defeats(r_j: &Rule, r_i: &Rule, gamma: &[AlethicFormula]) -> Result<bool, NormsError> {
    if r_j.kind != RuleKind::Obligation || r_i.kind != RuleKind::Obligation {
        return Err(NormsError::KindMismatch);
    }
    let heads = [
        AlethicFormula::Bool(r_i.head.clone()),
        AlethicFormula::Bool(r_j.head.clone()),
    ];
    let clause_i = !s5_consistent(heads.iter().chain(gamma.iter()));
    if !clause_i {
        return Ok(false);
    }
    let clause_ii = pl_entails([&r_j.body], &r_i.body) && !pl_entails([&r_i.body], &r_j.body);
    if !clause_ii {
        return Ok(false);
    }
    let clause_iii = pl_consistent([&r_i.head, &r_j.body]);
    Ok(clause_iii)
}

/// The defeat relation over a theory's obligations, by rule index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefeatGraph {
    defeaters: Vec<BTreeSet<usize>>,
}

impl DefeatGraph {
    pub fn build(theory: &Theory) -> Self {
        let rules = theory.r_oblig();
        let mut defeaters = vec![BTreeSet::new(); rules.len()];
        for (i, r_i) in rules.iter().enumerate() {
            for (j, r_j) in rules.iter().enumerate() {
                if i == j {
                    continue;
                }
                if defeats(r_j, r_i, theory.gamma()).expect("obligation slots are kind-checked") {
                    defeaters[i].insert(j);
                }
            }
        }
        DefeatGraph { defeaters }
    }

    /// D(r_i): the indices of the rules overriding rule `i`.
    pub fn defeaters_of(&self, i: usize) -> &BTreeSet<usize> {
        &self.defeaters[i]
    }

    /// All edges `(j, i)` meaning rule `j` overrides rule `i`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, ds) in self.defeaters.iter().enumerate() {
            for &j in ds {
                out.push((j, i));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_empty(&self) -> bool {
        self.defeaters.iter().all(|d| d.is_empty())
    }

    pub fn len(&self) -> usize {
        self.defeaters.len()
    }
}

/// `m(X)`: the material implications of a set of rules.
pub fn materialization<'a>(rules: impl IntoIterator<Item = &'a Rule>) -> Vec<BoolFormula> {
    dedup_stable(rules.into_iter().map(Rule::materialize).collect())
}

/// Coherence of a set of normality conditionals: no nonempty subset `X`
/// satisfies `m(X) |= /\ ~b(r)` over its own bodies. The empty subset is
/// excluded, since the empty conjunction is `true` and trivially entailed.
pub fn coherent(r_norm: &[Rule]) -> bool {
    incoherent_subset(r_norm).is_none()
}

/// A witness subset violating coherence, if any. The fixpoint of the
/// exceptionality iteration is tried first (nonempty fixpoints are always
/// witnesses); otherwise all nonempty subsets are enumerated.
pub fn incoherent_subset(r_norm: &[Rule]) -> Option<Vec<usize>> {
    let seq = crate::normality::lm_sequence(r_norm);
    let fixpoint = seq.final_level();
    if !fixpoint.is_empty() {
        return Some(fixpoint.iter().copied().collect());
    }
    debug_assert!(r_norm.len() < 32);
    for mask in 1u64..(1 << r_norm.len()) {
        let chosen: Vec<usize> = (0..r_norm.len()).filter(|i| mask >> i & 1 == 1).collect();
        let mats: Vec<BoolFormula> = chosen.iter().map(|&i| r_norm[i].materialize()).collect();
        let negated_bodies =
            BoolFormula::conjoin(chosen.iter().map(|&i| r_norm[i].body.clone().not()));
        if pl_entails(mats.iter(), &negated_bodies) {
            return Some(chosen);
        }
    }
    None
}

/// Convenience: the joint atoms of a slice of rules.
pub fn rule_atoms(rules: &[Rule]) -> Vec<String> {
    atoms_of(rules.iter())
}
