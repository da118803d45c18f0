//! The file surface: load a theory file, print the coherence/defeat
//! diagnostics, the world ranking, and the query verdicts: everything the
//! `ought` binary does, through the library API.
//!
//! ```bash
//! cargo run --example theory_files
//! cargo run --example theory_files -- path/to/your.theory
//! ```

use ought::cli::{
    cmd_check, cmd_query, cmd_rank, load_theory_file, render_check, render_query_text, render_rank,
    RankMethod,
};
use ought::model::EntailmentMode;
use std::path::PathBuf;

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("theories/asparagus.theory")
        });
    println!("loading {}", path.display());
    let file = load_theory_file(&path).expect("readable, well-formed theory file");
    for warning in &file.warnings {
        println!("warning: {warning}");
    }

    println!("--- check ---");
    print!("{}", render_check(&cmd_check(&file)));

    println!("--- rank ---");
    print!(
        "{}",
        render_rank(&cmd_rank(&file, RankMethod::Lex, false).unwrap())
    );

    println!("--- query ---");
    let report = cmd_query(&file, EntailmentMode::Replete, false).unwrap();
    print!("{}", render_query_text(&report));
}
