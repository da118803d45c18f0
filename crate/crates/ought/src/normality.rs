//! The lexicographic normality ordering over worlds.
//!
//! Normality conditionals are stratified by iterated exceptionality: level 0
//! is the whole set, and each next level keeps the conditionals whose
//! antecedent is exceptional for (entailed false by the materialization of)
//! the previous level. The differences between consecutive levels partition
//! the set by specificity. A world's falsification set is then scored as a
//! tuple of per-level counts, most specific level first, and worlds compare
//! lexicographically: falsifying a more specific conditional makes a world
//! less normal, and counts on less specific levels only break ties.

use crate::formula::{BoolFormula, Rule};
use crate::norms::materialization;
use crate::prop::{eval_bool, pl_entails, Valuation, Vocabulary};
use std::collections::BTreeSet;
use std::fmt;

/// Is `formula` exceptional for `rules`, i.e. does their materialization
/// entail its negation?
pub fn exceptional_for<'a>(
    formula: &BoolFormula,
    rules: impl IntoIterator<Item = &'a Rule>,
) -> bool {
    let mats = materialization(rules);
    pl_entails(mats.iter(), &formula.clone().not())
}

/// The decreasing sequence of exceptionality levels, by rule index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmSequence {
    levels: Vec<BTreeSet<usize>>,
}

impl LmSequence {
    /// The levels `E_0, ..., E_m`, where `m` is the stabilization index.
    pub fn levels(&self) -> &[BTreeSet<usize>] {
        &self.levels
    }

    /// The order `m`.
    pub fn order(&self) -> usize {
        self.levels.len() - 1
    }

    /// The fixpoint `E_m`; empty exactly when observed to stabilize at the
    /// empty set (guaranteed for coherent rule sets).
    pub fn final_level(&self) -> &BTreeSet<usize> {
        self.levels.last().expect("sequence has at least E_0")
    }
}

/// Iterate the exceptionality operator from the full rule set until it
/// stabilizes.
pub fn lm_sequence(r_norm: &[Rule]) -> LmSequence {
    let mut levels: Vec<BTreeSet<usize>> = vec![(0..r_norm.len()).collect()];
    loop {
        let current = levels.last().unwrap();
        let members: Vec<&Rule> = current.iter().map(|&i| &r_norm[i]).collect();
        let next: BTreeSet<usize> = current
            .iter()
            .copied()
            .filter(|&i| exceptional_for(&r_norm[i].body, members.iter().copied()))
            .collect();
        if next == *current {
            return LmSequence { levels };
        }
        levels.push(next);
    }
}

/// The ranked partition: level `i` gathers the conditionals of specificity
/// `i`, least specific first; the last slot holds the fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedPartition {
    levels: Vec<BTreeSet<usize>>,
}

impl RankedPartition {
    pub fn levels(&self) -> &[BTreeSet<usize>] {
        &self.levels
    }

    pub fn order(&self) -> usize {
        self.levels.len() - 1
    }

    /// Whether the fixpoint slot is nonempty (only possible for incoherent
    /// rule sets); its count then participates in tuples.
    pub fn has_residue(&self) -> bool {
        !self.levels.last().unwrap().is_empty()
    }

    /// The count tuple of a set of rule indices, most specific level first.
    /// The fixpoint coordinate is omitted when the fixpoint is empty.
    pub fn tuple_of(&self, rules: &BTreeSet<usize>) -> NormalityTuple {
        let skip = if self.has_residue() { 0 } else { 1 };
        let counts = self
            .levels
            .iter()
            .rev()
            .skip(skip)
            .map(|level| level.intersection(rules).count())
            .collect();
        NormalityTuple { counts }
    }
}

/// Compute the ranked partition from an LM-sequence.
pub fn ranked_partition(seq: &LmSequence) -> RankedPartition {
    let levels = seq.levels();
    let mut out: Vec<BTreeSet<usize>> = Vec::with_capacity(levels.len());
    for i in 0..levels.len() - 1 {
        out.push(levels[i].difference(&levels[i + 1]).copied().collect());
    }
    out.push(seq.final_level().clone());
    RankedPartition { levels: out }
}

/// The rank of a Boolean formula: the first level whose materialization does
/// not entail its negation, or `None` when every level does.
pub fn rank(formula: &BoolFormula, seq: &LmSequence, r_norm: &[Rule]) -> Option<usize> {
    let negated = formula.clone().not();
    for (i, level) in seq.levels().iter().enumerate() {
        let mats = materialization(level.iter().map(|&k| &r_norm[k]));
        if !pl_entails(mats.iter(), &negated) {
            return Some(i);
        }
    }
    None
}

/// Per-level falsification counts, compared lexicographically; smaller
/// counts on the first differing level mean a more normal world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityTuple {
    counts: Vec<usize>,
}

impl NormalityTuple {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `self` is at least as good as `other`: equal, or strictly smaller at
    /// the first differing coordinate.
    pub fn lex_geq(&self, other: &NormalityTuple) -> bool {
        debug_assert_eq!(self.counts.len(), other.counts.len());
        for (mine, theirs) in self.counts.iter().zip(other.counts.iter()) {
            if mine != theirs {
                return mine < theirs;
            }
        }
        true
    }
}

impl fmt::Display for NormalityTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ">")
    }
}

/// The conditionals falsified at a world: body true, head false.
pub fn falsification_set(world: Valuation, r_norm: &[Rule], vocab: &Vocabulary) -> BTreeSet<usize> {
    r_norm
        .iter()
        .enumerate()
        .filter(|(_, r)| eval_bool(&r.body, world, vocab) && !eval_bool(&r.head, world, vocab))
        .map(|(i, _)| i)
        .collect()
}

/// Raw falsification count, with no stratification and no defeat guard.
/// Exhibited for comparison with the lexicographic ranking.
pub fn fdis_count(world: Valuation, rules: &[Rule], vocab: &Vocabulary) -> usize {
    rules
        .iter()
        .filter(|r| eval_bool(&r.body, world, vocab) && !eval_bool(&r.head, world, vocab))
        .count()
}

/// The normality preorder derived from a set of normality conditionals.
#[derive(Debug, Clone)]
pub struct NormalityOrder {
    rules: Vec<Rule>,
    sequence: LmSequence,
    partition: RankedPartition,
}

impl NormalityOrder {
    pub fn new(r_norm: &[Rule]) -> Self {
        let sequence = lm_sequence(r_norm);
        let partition = ranked_partition(&sequence);
        NormalityOrder {
            rules: r_norm.to_vec(),
            sequence,
            partition,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn sequence(&self) -> &LmSequence {
        &self.sequence
    }

    pub fn partition(&self) -> &RankedPartition {
        &self.partition
    }

    pub fn world_tuple(&self, world: Valuation, vocab: &Vocabulary) -> NormalityTuple {
        self.partition
            .tuple_of(&falsification_set(world, &self.rules, vocab))
    }

    /// `w1` is at least as normal as `w2`.
    pub fn geq(&self, w1: Valuation, w2: Valuation, vocab: &Vocabulary) -> bool {
        self.world_tuple(w1, vocab)
            .lex_geq(&self.world_tuple(w2, vocab))
    }

    /// The maximally normal members of a set of worlds.
    pub fn max_normal(&self, worlds: &[Valuation], vocab: &Vocabulary) -> Vec<Valuation> {
        max_by_preorder(worlds, |a, b| self.geq(a, b, vocab))
    }
}

/// The maximal elements of a finite preorder: `w` is kept when every member
/// at least as high as `w` is also below it.
pub fn max_by_preorder(
    worlds: &[Valuation],
    geq: impl Fn(Valuation, Valuation) -> bool,
) -> Vec<Valuation> {
    worlds
        .iter()
        .copied()
        .filter(|&w| worlds.iter().all(|&v| !geq(v, w) || geq(w, v)))
        .collect()
}
