//! The etiquette scenario end to end: don't eat with your fingers, put your
//! napkin on, but asparagus is eaten with the fingers, and restaurants are
//! where asparagus normally shows up.
//!
//! ```bash
//! cargo run --example asparagus
//! ```

use ought::model::{entails, BuildOptions, EntailmentMode};
use ought::{parse_query, parse_rule, Theory};

fn main() {
    let theory = Theory::new(
        vec![],
        vec![
            parse_rule("true => ~a").unwrap(), // normally no asparagus
            parse_rule("r => a").unwrap(),     // at a restaurant, normally asparagus
        ],
        vec![
            parse_rule("O(~f)").unwrap(),  // do not eat with your fingers
            parse_rule("O(f|a)").unwrap(), // with asparagus, do
            parse_rule("O(n)").unwrap(),   // napkin on your lap
        ],
    )
    .unwrap();

    println!("theory over atoms {:?}", theory.vocab().atoms());
    for text in ["O(n|a)", "O(~f|a)", "O(~a)", "O(~f)"] {
        let query = parse_query(text).unwrap();
        let verdict = entails(
            &theory,
            &query,
            EntailmentMode::Replete,
            &BuildOptions::default(),
        )
        .unwrap();
        match verdict.witness {
            Some(w) => println!(
                "{text}: {} (witness: {})",
                if verdict.entailed {
                    "entailed"
                } else {
                    "not entailed"
                },
                w.render()
            ),
            None => println!(
                "{text}: {}",
                if verdict.entailed {
                    "entailed"
                } else {
                    "not entailed"
                }
            ),
        }
    }

    println!();
    println!("The napkin obligation strengthens into the asparagus context,");
    println!("the finger prohibition does not, being served asparagus is not");
    println!("itself prohibited, and the general prohibition survives.");
}
