//! The two engines agree: for theories without normality conditionals, the
//! all-good obligation holds exactly when the head is in the full meet
//! constrained output of the rewritten norms, and output membership implies
//! the conflict-tolerant verdict (the converse can fail, and does).
//!
//! ```bash
//! cargo run --example faithfulness
//! ```

use ought::gen::{random_flat_theory, random_input, rng_from_seed, GenConfig};
use ought::iol::faithfulness_check;
use ought::{parse_boolean, parse_rule, Theory};

fn main() {
    let theory = Theory::new(
        vec![],
        vec![],
        vec![
            parse_rule("O(~f)").unwrap(),
            parse_rule("O(f|a)").unwrap(),
            parse_rule("O(n)").unwrap(),
        ],
    )
    .unwrap();
    println!("etiquette norms, input `a`:");
    for head in ["f", "n", "~f"] {
        let report = faithfulness_check(
            &theory,
            &parse_boolean("a").unwrap(),
            &parse_boolean(head).unwrap(),
        )
        .unwrap();
        println!(
            "  head {head}: preference {} / output {}: {}",
            report.hansson_pref,
            report.io_member,
            if report.hansson_agrees {
                "agree"
            } else {
                "DISAGREE"
            }
        );
    }

    println!();
    println!("seeded sweep over 100 random flat theories:");
    let mut rng = rng_from_seed(1);
    let cfg = GenConfig {
        atoms: 3,
        norm_rules: 0,
        oblig_rules: 3,
    };
    let mut agreements = 0;
    let mut converse_gaps = 0;
    let mut cases = 0;
    for _ in 0..100 {
        let theory = random_flat_theory(&mut rng, &cfg);
        for _ in 0..2 {
            let input = random_input(&mut rng, cfg.atoms);
            let head = random_input(&mut rng, cfg.atoms);
            let report = faithfulness_check(&theory, &input, &head).unwrap();
            cases += 1;
            assert!(report.hansson_agrees && report.exists_forall_implied && report.bridge_ok);
            agreements += 1;
            if report.converse_gap {
                converse_gaps += 1;
            }
        }
    }
    println!("  {agreements}/{cases} agreements");
    println!("  {converse_gaps} cases were entailed without output membership,");
    println!("  confirming that only one direction of that comparison holds.");
}
