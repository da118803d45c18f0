//! Conclusions can be withdrawn: a theory containing another one need not
//! entail everything the smaller theory does. The prohibition on fingers
//! strengthens to the asparagus context only while nothing says asparagus
//! is special.
//!
//! ```bash
//! cargo run --example nonmonotonicity
//! ```

use ought::model::{entails, BuildOptions, EntailmentMode};
use ought::{contained_in, parse_alethic, parse_query, parse_rule, Theory};

fn main() {
    let possible = parse_alethic("<>(a & ~f)").unwrap();
    let smaller = Theory::new(
        vec![possible.clone()],
        vec![],
        vec![parse_rule("O(~f)").unwrap()],
    )
    .unwrap();
    let larger = Theory::new(
        vec![possible],
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
    assert!(contained_in(&smaller, &larger));

    let query = parse_query("O(~f|a)").unwrap();
    let opts = BuildOptions::default();
    let before = entails(&smaller, &query, EntailmentMode::Replete, &opts).unwrap();
    let after = entails(&larger, &query, EntailmentMode::Replete, &opts).unwrap();

    println!("smaller theory entails O(~f|a): {}", before.entailed);
    println!("larger theory entails O(~f|a):  {}", after.entailed);
    if let Some(w) = after.witness {
        println!("retraction witnessed by the world: {}", w.render());
    }
}
