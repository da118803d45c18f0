//! Seeded random theory generation for the cross-check harness and the
//! property suites. Bodies and heads are conjunctions of at most two
//! literals over distinct atoms; generated normality sets are filtered
//! through the coherence check by rejection sampling.

use crate::formula::{BoolFormula, Rule};
use crate::norms::{coherent, Theory};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub atoms: usize,
    pub norm_rules: usize,
    pub oblig_rules: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            atoms: 3,
            norm_rules: 2,
            oblig_rules: 3,
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn atom_name(index: usize) -> String {
    // p, q, r, s, ... single letters keep world labels short.
    let letter = (b'p' + (index % 8) as u8) as char;
    if index < 8 {
        letter.to_string()
    } else {
        format!("{letter}{}", index / 8)
    }
}

fn random_literal(rng: &mut ChaCha8Rng, atom_index: usize) -> BoolFormula {
    let atom = BoolFormula::atom(atom_name(atom_index));
    if rng.random_bool(0.5) {
        atom
    } else {
        atom.not()
    }
}

/// A conjunction of one or two literals over distinct atoms.
pub fn random_conjunction(rng: &mut ChaCha8Rng, atoms: usize) -> BoolFormula {
    debug_assert!(atoms >= 1);
    let first = rng.random_range(0..atoms);
    let lit = random_literal(rng, first);
    if atoms >= 2 && rng.random_bool(0.5) {
        let mut second = rng.random_range(0..atoms);
        while second == first {
            second = rng.random_range(0..atoms);
        }
        lit.and(random_literal(rng, second))
    } else {
        lit
    }
}

/// A rule body: `true` a third of the time, else a literal conjunction.
pub fn random_body(rng: &mut ChaCha8Rng, atoms: usize) -> BoolFormula {
    if rng.random_bool(1.0 / 3.0) {
        BoolFormula::Top
    } else {
        random_conjunction(rng, atoms)
    }
}

pub fn random_obligations(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Vec<Rule> {
    (0..cfg.oblig_rules)
        .map(|_| {
            Rule::obligation(
                random_body(rng, cfg.atoms),
                random_conjunction(rng, cfg.atoms),
            )
        })
        .collect()
}

/// Sample a coherent normality set; incoherent draws are rejected, and if
/// rejection keeps failing the set is shrunk until coherent (the empty set
/// always is).
pub fn random_normality_rules(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Vec<Rule> {
    for _ in 0..500 {
        let rules: Vec<Rule> = (0..cfg.norm_rules)
            .map(|_| {
                Rule::normality(
                    random_body(rng, cfg.atoms),
                    random_conjunction(rng, cfg.atoms),
                )
            })
            .collect();
        if coherent(&rules) {
            return rules;
        }
    }
    let mut rules: Vec<Rule> = (0..cfg.norm_rules)
        .map(|_| {
            Rule::normality(
                random_body(rng, cfg.atoms),
                random_conjunction(rng, cfg.atoms),
            )
        })
        .collect();
    while !coherent(&rules) {
        rules.pop();
    }
    rules
}

/// A random theory with empty hard information. All atoms are declared up
/// front so that sparse draws still range over the full vocabulary.
pub fn random_theory(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Theory {
    let r_norm = random_normality_rules(rng, cfg);
    let r_oblig = random_obligations(rng, cfg);
    Theory::new(Vec::new(), r_norm, r_oblig)
        .expect("generated rules are kind-correct")
        .with_declared_atoms((0..cfg.atoms).map(atom_name))
        .expect("generator stays within the vocabulary cap")
}

/// A random theory with no normality conditionals, as the cross-check
/// harness requires.
pub fn random_flat_theory(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Theory {
    let cfg = GenConfig {
        norm_rules: 0,
        ..*cfg
    };
    random_theory(rng, &cfg)
}

/// A PL-consistent input formula (a literal conjunction over distinct
/// atoms is consistent by construction).
pub fn random_input(rng: &mut ChaCha8Rng, atoms: usize) -> BoolFormula {
    random_conjunction(rng, atoms)
}
