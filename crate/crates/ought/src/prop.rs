//! Decision procedures for classical propositional logic and the flat S5
//! fragment, by exhaustive valuation enumeration.
//!
//! Worlds are identified with valuations over a fixed vocabulary: bit `i` of
//! a [`Valuation`] is the truth value of the `i`-th atom in lexicographic
//! order. The enumeration cap is [`MAX_ATOMS`] atoms per vocabulary.

use crate::formula::{AlethicFormula, BoolFormula, HasAtoms};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Largest supported vocabulary for world enumeration.
pub const MAX_ATOMS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropError {
    #[error("vocabulary has {atoms} atoms, more than the supported {max}")]
    VocabularyOverflow { atoms: usize, max: usize },
    #[error("atom `{0}` does not occur in the vocabulary")]
    UnknownAtom(String),
}

/// A truth assignment over a vocabulary, packed as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation(pub u32);

impl Valuation {
    pub fn is_true(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }
}

/// An ordered atom list; the order fixes valuation bit positions everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    atoms: Vec<String>,
}

impl Vocabulary {
    /// Build a vocabulary from atom names; sorts and deduplicates.
    pub fn new(atoms: impl IntoIterator<Item = String>) -> Result<Self, PropError> {
        let set: BTreeSet<String> = atoms.into_iter().collect();
        if set.len() > MAX_ATOMS {
            return Err(PropError::VocabularyOverflow {
                atoms: set.len(),
                max: MAX_ATOMS,
            });
        }
        Ok(Vocabulary {
            atoms: set.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms
            .binary_search_by(|probe| probe.as_str().cmp(atom))
            .ok()
    }

    pub fn world_count(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn worlds(&self) -> impl Iterator<Item = Valuation> {
        (0..self.world_count() as u32).map(Valuation)
    }

    /// Bar-notation label, ASCII-safe: false atoms get a `-` prefix.
    pub fn label(&self, world: Valuation) -> String {
        let mut parts = Vec::with_capacity(self.atoms.len());
        for (i, atom) in self.atoms.iter().enumerate() {
            if world.is_true(i) {
                parts.push(atom.clone());
            } else {
                parts.push(format!("-{atom}"));
            }
        }
        parts.join(" ")
    }

    /// Extend with further atoms, keeping lexicographic order.
    pub fn extend(&self, extra: impl IntoIterator<Item = String>) -> Result<Self, PropError> {
        Vocabulary::new(self.atoms.iter().cloned().chain(extra))
    }

    fn check_covers(&self, formula: &impl HasAtoms) -> Result<(), PropError> {
        for atom in formula.atoms() {
            if self.index_of(&atom).is_none() {
                return Err(PropError::UnknownAtom(atom));
            }
        }
        Ok(())
    }
}

/// Truth of `formula` at `world` under `vocab`. Atoms must be covered.
pub fn eval_bool(formula: &BoolFormula, world: Valuation, vocab: &Vocabulary) -> bool {
    match formula {
        BoolFormula::Top => true,
        BoolFormula::Bottom => false,
        BoolFormula::Atom(name) => {
            let idx = vocab
                .index_of(name)
                .expect("atom covered by the vocabulary");
            world.is_true(idx)
        }
        BoolFormula::Not(inner) => !eval_bool(inner, world, vocab),
        BoolFormula::And(a, b) => eval_bool(a, world, vocab) && eval_bool(b, world, vocab),
        BoolFormula::Or(a, b) => eval_bool(a, world, vocab) || eval_bool(b, world, vocab),
        BoolFormula::Implies(a, b) => !eval_bool(a, world, vocab) || eval_bool(b, world, vocab),
        BoolFormula::Iff(a, b) => eval_bool(a, world, vocab) == eval_bool(b, world, vocab),
    }
}

/// The valuations over `vocab` satisfying `formula`, in bitmask order.
pub fn models_of(formula: &BoolFormula, vocab: &Vocabulary) -> Result<Vec<Valuation>, PropError> {
    vocab.check_covers(formula)?;
    Ok(vocab
        .worlds()
        .filter(|w| eval_bool(formula, *w, vocab))
        .collect())
}

fn eval_indexed(formula: &BoolFormula, mask: u64, index: &BTreeMap<&str, usize>) -> bool {
    match formula {
        BoolFormula::Top => true,
        BoolFormula::Bottom => false,
        BoolFormula::Atom(name) => mask >> index[name.as_str()] & 1 == 1,
        BoolFormula::Not(inner) => !eval_indexed(inner, mask, index),
        BoolFormula::And(a, b) => eval_indexed(a, mask, index) && eval_indexed(b, mask, index),
        BoolFormula::Or(a, b) => eval_indexed(a, mask, index) || eval_indexed(b, mask, index),
        BoolFormula::Implies(a, b) => !eval_indexed(a, mask, index) || eval_indexed(b, mask, index),
        BoolFormula::Iff(a, b) => eval_indexed(a, mask, index) == eval_indexed(b, mask, index),
    }
}

/// Classical entailment over the joint vocabulary of premises and goal.
pub fn pl_entails<'a>(
    premises: impl IntoIterator<Item = &'a BoolFormula>,
    goal: &BoolFormula,
) -> bool {
    let premises: Vec<&BoolFormula> = premises.into_iter().collect();
    let mut atoms = BTreeSet::new();
    for p in &premises {
        p.collect_atoms(&mut atoms);
    }
    goal.collect_atoms(&mut atoms);
    let index: BTreeMap<&str, usize> = atoms
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_str(), i))
        .collect();
    debug_assert!(index.len() < 64);
    for mask in 0..(1u64 << index.len()) {
        if premises.iter().all(|p| eval_indexed(p, mask, &index))
            && !eval_indexed(goal, mask, &index)
        {
            return false;
        }
    }
    true
}

/// PL-consistency: the set does not entail `false`.
pub fn pl_consistent<'a>(formulas: impl IntoIterator<Item = &'a BoolFormula>) -> bool {
    !pl_entails(formulas, &BoolFormula::Bottom)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum ModalKind {
    Nec,
    Poss,
}

fn collect_tokens(formula: &AlethicFormula, out: &mut BTreeSet<(ModalKind, BoolFormula)>) {
    match formula {
        AlethicFormula::Bool(_) => {}
        AlethicFormula::Nec(b) => {
            out.insert((ModalKind::Nec, b.clone()));
        }
        AlethicFormula::Poss(b) => {
            out.insert((ModalKind::Poss, b.clone()));
        }
        AlethicFormula::Not(inner) => collect_tokens(inner, out),
        AlethicFormula::And(a, b)
        | AlethicFormula::Or(a, b)
        | AlethicFormula::Implies(a, b)
        | AlethicFormula::Iff(a, b) => {
            collect_tokens(a, out);
            collect_tokens(b, out);
        }
    }
}

fn substitute_tokens(
    formula: &AlethicFormula,
    verdicts: &BTreeMap<(ModalKind, BoolFormula), bool>,
) -> BoolFormula {
    match formula {
        AlethicFormula::Bool(b) => b.clone(),
        AlethicFormula::Nec(b) => constant(verdicts[&(ModalKind::Nec, b.clone())]),
        AlethicFormula::Poss(b) => constant(verdicts[&(ModalKind::Poss, b.clone())]),
        AlethicFormula::Not(inner) => substitute_tokens(inner, verdicts).not(),
        AlethicFormula::And(a, b) => {
            substitute_tokens(a, verdicts).and(substitute_tokens(b, verdicts))
        }
        AlethicFormula::Or(a, b) => {
            substitute_tokens(a, verdicts).or(substitute_tokens(b, verdicts))
        }
        AlethicFormula::Implies(a, b) => {
            substitute_tokens(a, verdicts).implies(substitute_tokens(b, verdicts))
        }
        AlethicFormula::Iff(a, b) => {
            substitute_tokens(a, verdicts).iff(substitute_tokens(b, verdicts))
        }
    }
}

fn constant(value: bool) -> BoolFormula {
    if value {
        BoolFormula::Top
    } else {
        BoolFormula::Bottom
    }
}

/// S5 satisfiability for a set of flat alethic formulas.
///
/// Each `[]A`/`<>A` subformula is treated as a token. For every Boolean
/// assignment to the tokens: the members with tokens replaced by their truth
/// values give the actual-world constraints; `[]A` true (and `<>A` false)
/// contribute `A` (resp. `~A`) to the universal constraints; `<>A` true (and
/// `[]A` false) each demand a witness world. The set is S5-consistent iff
/// some assignment makes the actual world and every witness PL-consistent
/// with the universal constraints.
pub fn s5_consistent<'a>(formulas: impl IntoIterator<Item = &'a AlethicFormula>) -> bool {
    let formulas: Vec<&AlethicFormula> = formulas.into_iter().collect();
    let mut tokens = BTreeSet::new();
    for f in &formulas {
        collect_tokens(f, &mut tokens);
    }
    let tokens: Vec<(ModalKind, BoolFormula)> = tokens.into_iter().collect();
    debug_assert!(tokens.len() < 32);

    for mask in 0..(1u64 << tokens.len()) {
        let verdicts: BTreeMap<(ModalKind, BoolFormula), bool> = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), mask >> i & 1 == 1))
            .collect();

        let mut universal: Vec<BoolFormula> = Vec::new();
        let mut witnesses: Vec<BoolFormula> = Vec::new();
        for ((kind, arg), value) in &verdicts {
            match (kind, value) {
                (ModalKind::Nec, true) => universal.push(arg.clone()),
                (ModalKind::Nec, false) => witnesses.push(arg.clone().not()),
                (ModalKind::Poss, true) => witnesses.push(arg.clone()),
                (ModalKind::Poss, false) => universal.push(arg.clone().not()),
            }
        }

        let actual: Vec<BoolFormula> = formulas
            .iter()
            .map(|f| substitute_tokens(f, &verdicts))
            .collect();
        if !pl_consistent(actual.iter().chain(universal.iter())) {
            continue;
        }
        let witnesses_ok = witnesses
            .iter()
            .all(|w| pl_consistent(std::iter::once(w).chain(universal.iter())));
        if witnesses_ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_alethic;
    use crate::formula::parse_boolean;

    fn vocab(atoms: &[&str]) -> Vocabulary {
        Vocabulary::new(atoms.iter().map(|s| s.to_string())).unwrap()
    }

    #[test]
    fn models_of_atom() {
        let v = vocab(&["a", "f"]);
        let worlds = models_of(&parse_boolean("a").unwrap(), &v).unwrap();
        // bit 0 = a, bit 1 = f
        assert_eq!(worlds, vec![Valuation(0b01), Valuation(0b11)]);
    }

    #[test]
    fn models_of_bottom_is_empty() {
        let v = vocab(&["a"]);
        assert!(models_of(&BoolFormula::Bottom, &v).unwrap().is_empty());
    }

    #[test]
    fn models_of_biconditional() {
        // Expected set derived by enumerating all four valuations by hand:
        // only the two agreeing assignments satisfy a <-> f.
        let v = vocab(&["a", "f"]);
        let worlds = models_of(&parse_boolean("a <-> f").unwrap(), &v).unwrap();
        assert_eq!(worlds, vec![Valuation(0b00), Valuation(0b11)]);
    }

    #[test]
    fn entailment_drives_exceptionality() {
        let p1 = parse_boolean("true -> ~a").unwrap();
        let p2 = parse_boolean("r -> a").unwrap();
        let goal = parse_boolean("~r").unwrap();
        assert!(pl_entails([&p1, &p2], &goal));
    }

    #[test]
    fn tautology_from_nothing() {
        assert!(pl_entails([], &parse_boolean("a | ~a").unwrap()));
    }

    #[test]
    fn atoms_do_not_entail_each_other() {
        let a = parse_boolean("a").unwrap();
        let f = parse_boolean("f").unwrap();
        assert!(!pl_entails([&a], &f));
    }

    #[test]
    fn s5_contradictory_heads() {
        let nf = parse_alethic("~f").unwrap();
        let f = parse_alethic("f").unwrap();
        assert!(!s5_consistent([&nf, &f]));
    }

    #[test]
    fn s5_duality() {
        let poss = parse_alethic("<>a").unwrap();
        let nec = parse_alethic("[]~a").unwrap();
        assert!(!s5_consistent([&poss, &nec]));
    }

    #[test]
    fn s5_witness_world_differs_from_actual() {
        let poss = parse_alethic("<>(a & ~f)").unwrap();
        let not_a = parse_alethic("~a").unwrap();
        assert!(s5_consistent([&poss, &not_a]));
    }

    #[test]
    fn s5_negated_diamond_constrains_actual_world() {
        let no_poss = parse_alethic("~<>a").unwrap();
        let a = parse_alethic("a").unwrap();
        assert!(!s5_consistent([&no_poss, &a]));
        assert!(s5_consistent([&no_poss]));
    }

    #[test]
    fn s5_agrees_with_pl_on_boolean_sets() {
        let cases = ["a & ~a", "a & f", "a | ~a", "a -> false"];
        for text in cases {
            let b = parse_boolean(text).unwrap();
            let al = AlethicFormula::Bool(b.clone());
            assert_eq!(s5_consistent([&al]), pl_consistent([&b]), "case {text}");
        }
    }

    #[test]
    fn entailment_iff_no_countermodel() {
        let v = vocab(&["a", "f", "r"]);
        let premise = parse_boolean("a -> f").unwrap();
        let goal = parse_boolean("~a | f").unwrap();
        let counter = premise.clone().and(goal.clone().not());
        assert_eq!(
            pl_entails([&premise], &goal),
            models_of(&counter, &v).unwrap().is_empty()
        );
    }

    #[test]
    fn unused_vocabulary_atoms_do_not_matter() {
        let small = vocab(&["a"]);
        let big = vocab(&["a", "x", "y"]);
        let phi = parse_boolean("a").unwrap();
        let small_count = models_of(&phi, &small).unwrap().len();
        let big_count = models_of(&phi, &big).unwrap().len();
        assert_eq!(small_count * 4, big_count);
    }

    #[test]
    fn vocabulary_is_capped() {
        let atoms = (0..MAX_ATOMS + 1).map(|i| format!("a{i:02}"));
        assert!(matches!(
            Vocabulary::new(atoms),
            Err(PropError::VocabularyOverflow { .. })
        ));
    }

    #[test]
    fn labels_use_bar_notation() {
        let v = vocab(&["a", "f", "n", "r"]);
        assert_eq!(v.label(Valuation(0b0111)), "a f n -r");
        assert_eq!(v.label(Valuation(0b0100)), "-a -f n -r");
    }
}
