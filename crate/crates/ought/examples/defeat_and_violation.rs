//! The overriding relation and the violation sets it shapes. A more
//! specific conflicting obligation overrides a general one, unless it is a
//! contrary-to-duty norm, which presupposes the violation instead of
//! carving out an exception ("if you kill, do it gently" must not override
//! "do not kill").
//!
//! ```bash
//! cargo run --example defeat_and_violation
//! ```

use ought::model::{BuildOptions, CanonicalModel};
use ought::{parse_rule, DefeatGraph, Theory};

fn show_graph(theory: &Theory) {
    let graph = DefeatGraph::build(theory);
    if graph.edges().is_empty() {
        println!("  (no overriding)");
    }
    for (j, i) in graph.edges() {
        println!(
            "  {}  overrides  {}",
            theory.r_oblig()[j],
            theory.r_oblig()[i]
        );
    }
}

fn main() {
    let etiquette = Theory::new(
        vec![],
        vec![],
        vec![
            parse_rule("O(~f)").unwrap(),
            parse_rule("O(f|a)").unwrap(),
            parse_rule("O(n)").unwrap(),
        ],
    )
    .unwrap();
    println!("etiquette norms:");
    show_graph(&etiquette);

    let gentle = Theory::new(
        vec![],
        vec![],
        vec![
            parse_rule("O(~k)").unwrap(),
            parse_rule("O(k & g|k)").unwrap(),
        ],
    )
    .unwrap();
    println!("gentle-murder norms:");
    show_graph(&gentle);

    println!();
    println!("violation sets (an overridden obligation whose overrider is");
    println!("triggered does not count against the world):");
    let model = CanonicalModel::build(&etiquette, &BuildOptions::default()).unwrap();
    for w in model.worlds() {
        let violated: Vec<String> = model
            .violation(w)
            .iter()
            .map(|&i| etiquette.r_oblig()[i].to_string())
            .collect();
        println!("  {:<10}  {{{}}}", model.label(w), violated.join(", "));
    }
}
