//! Golden suite over the shipped theory corpus: every `.theory` file has an
//! `.expected` sidecar with one `query: yes|no` line per query, optionally
//! followed by `; witness <formula>` constraining the reported world.

mod common;

use ought::cli::load_theory_file;
use ought::model::{entails, BuildOptions, EntailmentMode};
use ought::prop::eval_bool;
use std::path::{Path, PathBuf};

struct Expectation {
    query: String,
    entailed: bool,
    witness_constraint: Option<String>,
}

fn parse_expected(source: &str) -> Vec<Expectation> {
    source
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let (query, rest) = line.split_once(':').expect("query: verdict");
            let (verdict, witness) = match rest.split_once(';') {
                Some((v, w)) => {
                    let w = w
                        .trim()
                        .strip_prefix("witness")
                        .expect("`; witness <formula>`");
                    (v.trim(), Some(w.trim().to_string()))
                }
                None => (rest.trim(), None),
            };
            Expectation {
                query: query.trim().to_string(),
                entailed: match verdict {
                    "yes" => true,
                    "no" => false,
                    other => panic!("bad verdict `{other}`"),
                },
                witness_constraint: witness,
            }
        })
        .collect()
}

fn theories_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("theories")
}

fn run_corpus_file(stem: &str) {
    let dir = theories_dir();
    let file = load_theory_file(dir.join(format!("{stem}.theory"))).unwrap();
    let expected_src = std::fs::read_to_string(dir.join(format!("{stem}.expected"))).unwrap();
    let expected = parse_expected(&expected_src);
    assert_eq!(
        file.queries.len(),
        expected.len(),
        "{stem}: query count differs from the sidecar"
    );
    for (query, expect) in file.queries.iter().zip(&expected) {
        assert_eq!(
            query.to_string(),
            expect.query,
            "{stem}: query order differs from the sidecar"
        );
        let verdict = entails(
            &file.theory,
            query,
            EntailmentMode::Replete,
            &BuildOptions::default(),
        )
        .unwrap();
        assert_eq!(
            verdict.entailed, expect.entailed,
            "{stem}: `{query}` verdict mismatch"
        );
        if let Some(constraint) = &expect.witness_constraint {
            let formula = ought::parse_boolean(constraint).unwrap();
            let extended = file
                .theory
                .clone()
                .with_declared_atoms(ought::formula::HasAtoms::atoms(query))
                .unwrap();
            let witness = verdict
                .witness
                .unwrap_or_else(|| panic!("{stem}: `{query}` should carry a witness"));
            assert!(
                eval_bool(&formula, witness.world(), extended.vocab()),
                "{stem}: `{query}` witness {} does not satisfy {constraint}",
                witness.label()
            );
        }
    }
}

#[test]
fn asparagus() {
    run_corpus_file("asparagus");
}

#[test]
fn exception_normality() {
    run_corpus_file("exception-normality");
}

#[test]
fn prohibited_exception() {
    run_corpus_file("prohibited-exception");
}

#[test]
fn nonmonotonicity_pair() {
    run_corpus_file("nonmonotonicity-1");
    run_corpus_file("nonmonotonicity-2");
    // The pair is genuinely ordered by containment.
    let dir = theories_dir();
    let smaller = load_theory_file(dir.join("nonmonotonicity-1.theory")).unwrap();
    let larger = load_theory_file(dir.join("nonmonotonicity-2.theory")).unwrap();
    assert!(ought::contained_in(&smaller.theory, &larger.theory));
}

#[test]
fn gentle_murder() {
    run_corpus_file("gentle-murder");
}

#[test]
fn conflict_pair() {
    run_corpus_file("conflict-pair");
}

#[test]
fn asparagus_norms() {
    run_corpus_file("asparagus-norms");
}

#[test]
fn every_theory_file_has_a_sidecar() {
    let dir = theories_dir();
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) == Some("theory") {
            let sidecar = path.with_extension("expected");
            assert!(sidecar.exists(), "{} lacks a sidecar", path.display());
        }
    }
}
