//! Why worlds are ranked lexicographically rather than by a flat count:
//! under the flat count, falsifying a specific conditional costs the same
//! as falsifying a general one, so `r & a` and `r & ~a` tie. The
//! stratified comparison separates them.
//!
//! ```bash
//! cargo run --example ranking_methods
//! ```

use ought::model::{BuildOptions, CanonicalModel};
use ought::normality::fdis_count;
use ought::{parse_rule, Theory};

fn main() {
    let theory = Theory::new(
        vec![],
        vec![
            parse_rule("true => ~a").unwrap(),
            parse_rule("r => a").unwrap(),
        ],
        vec![],
    )
    .unwrap();
    let model = CanonicalModel::build(&theory, &BuildOptions::default()).unwrap();
    let vocab = model.vocab();

    println!("{:<8}  {:<8}  flat-count", "world", "tuple");
    let mut worlds = model.worlds();
    worlds.sort_by_key(|&w| model.tuple(w).counts().to_vec());
    for w in worlds {
        println!(
            "{:<8}  {:<8}  {}",
            vocab.label(w),
            model.tuple(w).to_string(),
            fdis_count(w, theory.r_norm(), vocab)
        );
    }

    println!();
    println!("Flat counting ties `r a` (a general exception) with `-a r`");
    println!("(a falsified specific expectation); the tuple comparison ranks");
    println!("the specific falsification strictly lower.");
}
