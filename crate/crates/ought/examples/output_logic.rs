//! The norm-based engine: obligations become body/head pairs whose bodies
//! are strengthened with the negated bodies of their defeaters, detachment
//! collapses into classical consequence, and inconsistency is avoided by
//! intersecting the outputs of the maximal norm subsets that stay
//! consistent with the input.
//!
//! ```bash
//! cargo run --example output_logic
//! ```

use ought::iol::{fullmeet_contains, maxfamily, out4plus_contains, rewrite_defeaters};
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
    let norms = rewrite_defeaters(&theory);
    println!("rewritten norms:");
    for (i, pair) in norms.iter().enumerate() {
        println!("  {i}: {pair}");
    }

    let input = parse_boolean("a").unwrap();
    let family = maxfamily(&norms, &input).unwrap();
    println!(
        "maximal input-consistent subsets under `a`: {:?}",
        family.members()
    );

    for head in ["f", "n", "~f", "~a", "f & n"] {
        let head = parse_boolean(head).unwrap();
        println!(
            "full meet outputs {head}: {}",
            fullmeet_contains(&norms, &input, &head).unwrap()
        );
    }

    // A conflict splits the family and the intersection goes quiet.
    let conflict = [
        ought::iol::IOPair::new(parse_boolean("true").unwrap(), parse_boolean("x").unwrap()),
        ought::iol::IOPair::new(parse_boolean("true").unwrap(), parse_boolean("~x").unwrap()),
    ];
    let top = parse_boolean("true").unwrap();
    let family = maxfamily(&conflict, &top).unwrap();
    println!();
    println!("conflicting norms split into {:?}", family.members());
    for member in family.members() {
        let x = parse_boolean("x").unwrap();
        println!(
            "  subset {:?} outputs x: {}",
            member,
            out4plus_contains(member.iter().map(|&i| &conflict[i]), &top, &x)
        );
    }
    println!(
        "full meet outputs x: {}",
        fullmeet_contains(&conflict, &top, &parse_boolean("x").unwrap()).unwrap()
    );
}
