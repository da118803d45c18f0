//! The ideality ordering over worlds, with the defeat guard.
//!
//! A world violates an obligation when the body holds, the head fails, and
//! no overriding obligation is triggered there: an obligation suspended by a
//! complied-with, more specific one does not count against the world.
//! Worlds compare by set inclusion of their violation sets, not by counts,
//! so worlds violating incomparable sets are incomparable. The lifting to
//! sets of worlds is the usual one: `U` is at least as good as `V` when
//! every member of `V` is weakly dominated by some member of `U`.

use crate::formula::Rule;
use crate::normality::max_by_preorder;
use crate::norms::DefeatGraph;
use crate::prop::{eval_bool, Valuation, Vocabulary};
use std::collections::BTreeSet;

/// The obligations violated at `world`, excusing overridden ones whose
/// defeater is triggered.
pub fn violation_set(
    world: Valuation,
    r_oblig: &[Rule],
    graph: &DefeatGraph,
    vocab: &Vocabulary,
) -> BTreeSet<usize> {
    r_oblig
        .iter()
        .enumerate()
        .filter(|(i, r)| {
            eval_bool(&r.body, world, vocab)
                && !eval_bool(&r.head, world, vocab)
                && graph
                    .defeaters_of(*i)
                    .iter()
                    .all(|&j| !eval_bool(&r_oblig[j].body, world, vocab))
        })
        .map(|(i, _)| i)
        .collect()
}

/// The ideality preorder derived from a theory's obligations.
#[derive(Debug, Clone)]
pub struct IdealityOrder {
    rules: Vec<Rule>,
    graph: DefeatGraph,
}

impl IdealityOrder {
    pub fn new(r_oblig: &[Rule], graph: DefeatGraph) -> Self {
        IdealityOrder {
            rules: r_oblig.to_vec(),
            graph,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn graph(&self) -> &DefeatGraph {
        &self.graph
    }

    pub fn violation_set(&self, world: Valuation, vocab: &Vocabulary) -> BTreeSet<usize> {
        violation_set(world, &self.rules, &self.graph, vocab)
    }

    /// `w1` is at least as good as `w2`: its violations are included in
    /// `w2`'s.
    pub fn geq(&self, w1: Valuation, w2: Valuation, vocab: &Vocabulary) -> bool {
        self.violation_set(w1, vocab)
            .is_subset(&self.violation_set(w2, vocab))
    }

    /// Set lifting: every member of `vs` is weakly dominated by some member
    /// of `us`. Vacuously true when `vs` is empty.
    pub fn lifted_geq(&self, us: &[Valuation], vs: &[Valuation], vocab: &Vocabulary) -> bool {
        vs.iter()
            .all(|&v| us.iter().any(|&u| self.geq(u, v, vocab)))
    }

    /// The maximally good members of a set of worlds.
    pub fn max_ideal(&self, worlds: &[Valuation], vocab: &Vocabulary) -> Vec<Valuation> {
        max_by_preorder(worlds, |a, b| self.geq(a, b, vocab))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_boolean, parse_rule};
    use crate::norms::Theory;
    use crate::prop::models_of;

    fn asparagus() -> (Theory, IdealityOrder) {
        let theory = Theory::new(
            vec![],
            vec![
                parse_rule("true => ~a").unwrap(),
                parse_rule("r => a").unwrap(),
            ],
            vec![
                parse_rule("O(~f)").unwrap(),
                parse_rule("O(f|a)").unwrap(),
                parse_rule("O(n)").unwrap(),
            ],
        )
        .unwrap();
        let graph = DefeatGraph::build(&theory);
        let order = IdealityOrder::new(theory.r_oblig(), graph);
        (theory, order)
    }

    fn world(vocab: &Vocabulary, text: &str) -> Valuation {
        let models = models_of(&parse_boolean(text).unwrap(), vocab).unwrap();
        assert_eq!(models.len(), 1, "{text} should pin down one world");
        models[0]
    }

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    #[test]
    fn triggered_defeater_excuses_the_general_obligation() {
        let (theory, order) = asparagus();
        let v = theory.vocab();
        // Eating asparagus with fingers and napkin on: nothing violated.
        let w = world(v, "a & f & n & ~r");
        assert_eq!(order.violation_set(w, v), set(&[]));
    }

    #[test]
    fn specific_obligation_itself_can_be_violated() {
        let (theory, order) = asparagus();
        let v = theory.vocab();
        let w = world(v, "a & ~f & n & ~r");
        assert_eq!(order.violation_set(w, v), set(&[1]));
    }

    #[test]
    fn untriggered_defeater_does_not_excuse() {
        let (theory, order) = asparagus();
        let v = theory.vocab();
        let w = world(v, "~a & f & ~n & ~r");
        assert_eq!(order.violation_set(w, v), set(&[0, 2]));
    }

    #[test]
    fn inclusion_order_on_violations() {
        let (theory, order) = asparagus();
        let v = theory.vocab();
        let clean = world(v, "a & f & n & ~r");
        let napkinless = world(v, "a & f & ~n & ~r");
        assert!(order.geq(clean, napkinless, v));
        assert!(!order.geq(napkinless, clean, v));
    }

    #[test]
    fn incomparable_violation_sets() {
        let (theory, order) = asparagus();
        let v = theory.vocab();
        // {O(~f)} versus {O(n)}: neither contains the other.
        let fingers = world(v, "~a & f & n & ~r");
        let napkinless = world(v, "~a & ~f & ~n & ~r");
        assert!(!order.geq(fingers, napkinless, v));
        assert!(!order.geq(napkinless, fingers, v));
    }

    #[test]
    fn compliant_exception_world_is_as_good_as_the_rule_follower() {
        // Under the bare pair, a world that eats the asparagus with its
        // fingers violates nothing, just like the world that avoids both.
        let theory = Theory::new(
            vec![],
            vec![],
            vec![parse_rule("O(~f)").unwrap(), parse_rule("O(f|a)").unwrap()],
        )
        .unwrap();
        let graph = DefeatGraph::build(&theory);
        let order = IdealityOrder::new(theory.r_oblig(), graph);
        let v = theory.vocab();
        let compliant_exception = world(v, "a & f");
        let rule_follower = world(v, "~a & ~f");
        assert_eq!(order.violation_set(compliant_exception, v), set(&[]));
        assert_eq!(order.violation_set(rule_follower, v), set(&[]));
        assert!(order.geq(compliant_exception, rule_follower, v));
        assert!(order.geq(rule_follower, compliant_exception, v));
    }

    #[test]
    fn no_obligations_means_total_indifference() {
        let theory = Theory::new(vec![], vec![], vec![])
            .unwrap()
            .with_declared_atoms(["p".to_string()])
            .unwrap();
        let graph = DefeatGraph::build(&theory);
        let order = IdealityOrder::new(theory.r_oblig(), graph);
        let v = theory.vocab();
        for w1 in v.worlds() {
            for w2 in v.worlds() {
                assert!(order.geq(w1, w2, v));
            }
        }
    }

    #[test]
    fn lifting_edge_cases() {
        let (theory, order) = asparagus();
        let v = theory.vocab();
        let all: Vec<Valuation> = v.worlds().collect();
        assert!(order.lifted_geq(&all, &all, v));
        assert!(order.lifted_geq(&all, &[], v));
        assert!(!order.lifted_geq(&[], &all, v));
    }

    #[test]
    fn lifting_separates_filtered_from_unfiltered_sets() {
        // With every world admitted the fingers-worlds dominate, but among
        // the most normal ones they no longer do.
        let (theory, order) = asparagus();
        let v = theory.vocab();
        let norm = crate::normality::NormalityOrder::new(theory.r_norm());
        let f_worlds = models_of(&parse_boolean("f").unwrap(), v).unwrap();
        let not_f_worlds = models_of(&parse_boolean("~f").unwrap(), v).unwrap();
        assert!(order.lifted_geq(&f_worlds, &not_f_worlds, v));
        let best_f = norm.max_normal(&f_worlds, v);
        let best_not_f = norm.max_normal(&not_f_worlds, v);
        assert!(!order.lifted_geq(&best_f, &best_not_f, v));
    }

    #[test]
    fn max_ideal_of_asparagus_worlds() {
        let (theory, order) = asparagus();
        let v = theory.vocab();
        let a_worlds = models_of(&parse_boolean("a").unwrap(), v).unwrap();
        let best = order.max_ideal(&a_worlds, v);
        let expected = models_of(&parse_boolean("a & f & n").unwrap(), v).unwrap();
        assert_eq!(best, expected);
    }

    #[test]
    fn max_ideal_trivial_cases() {
        let theory = Theory::new(vec![], vec![], vec![])
            .unwrap()
            .with_declared_atoms(["p".to_string()])
            .unwrap();
        let graph = DefeatGraph::build(&theory);
        let order = IdealityOrder::new(theory.r_oblig(), graph);
        let v = theory.vocab();
        let all: Vec<Valuation> = v.worlds().collect();
        assert_eq!(order.max_ideal(&all, v), all);
        assert_eq!(order.max_ideal(&[], v), Vec::<Valuation>::new());
    }
}
