//! Unresolved conflicts are tolerated without deontic explosion: both of
//! two contradictory obligations hold, yet arbitrary obligations do not
//! follow. The all-good reading (every best world complies) instead makes
//! both fail.
//!
//! ```bash
//! cargo run --example conflicting_obligations
//! ```

use ought::model::{entails, BuildOptions, EntailmentMode};
use ought::{parse_query, parse_rule, Theory};

fn main() {
    let theory = Theory::new(
        vec![],
        vec![],
        vec![parse_rule("O(x)").unwrap(), parse_rule("O(~x)").unwrap()],
    )
    .unwrap();

    let opts = BuildOptions::default();
    for text in ["O(x)", "O(~x)", "O(y)", "OH(x)", "OH(~x)"] {
        let query = parse_query(text).unwrap();
        let verdict = entails(&theory, &query, EntailmentMode::Replete, &opts).unwrap();
        println!(
            "{text}: {}",
            if verdict.entailed {
                "entailed"
            } else {
                "not entailed"
            }
        );
    }

    println!();
    println!("O tolerates the conflict (both hold, y does not follow);");
    println!("OH requires all best worlds to comply, so both fail there.");
}
