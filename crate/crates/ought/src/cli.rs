//! Theory-file ingestion and the reports behind the `ought` binary.
//!
//! A theory file is line-oriented UTF-8 with `#` comments. Directives:
//!
//! ```text
//! atoms:   a f n r          # optional extra vocabulary
//! fact:    <>(a & ~f)       # hard information (Boolean or alethic)
//! default: r => a           # normality conditional
//! norm:    O(f|a)           # conditional obligation
//! query:   O(n|a)           # anything `parse_query` accepts
//! ```
//!
//! Exit codes: 0 success (all queries entailed), 1 some query not entailed
//! or a cross-check disagreement, 2 parse error, 3 incoherent normality
//! set, 4 resource limit, 5 I/O error.

use crate::formula::{
    parse_alethic, parse_boolean, parse_query, parse_rule, BoolFormula, Query, RuleKind,
};
use crate::gen::{random_flat_theory, random_input, rng_from_seed, GenConfig};
use crate::iol::{fullmeet_contains, maxfamily, out4plus_contains, rewrite_defeaters, IolError};
use crate::model::{entails, BuildOptions, CanonicalModel, EntailmentMode, ModelError};
use crate::normality::{fdis_count, lm_sequence, ranked_partition};
use crate::norms::{incoherent_subset, DefeatGraph, NormsError, Theory};
use crate::prop::PropError;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_ENTAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCOHERENT: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(
        "incoherent normality set (witness rules {witness:?}); use --allow-incoherent to proceed"
    )]
    Incoherent { witness: Vec<usize> },
    #[error("{0}")]
    ResourceLimit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Incoherent { .. } => EXIT_INCOHERENT,
            CliError::ResourceLimit(_) => EXIT_RESOURCE,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(err: ModelError) -> Self {
        match err {
            ModelError::Incoherent { witness } => CliError::Incoherent { witness },
            ModelError::ResourceLimit { atoms, max } => CliError::ResourceLimit(format!(
                "all-models mode supports at most {max} atoms, got {atoms}"
            )),
            ModelError::Prop(p) => p.into(),
        }
    }
}

impl From<PropError> for CliError {
    fn from(err: PropError) -> Self {
        match err {
            PropError::VocabularyOverflow { .. } => CliError::ResourceLimit(err.to_string()),
            PropError::UnknownAtom(_) => CliError::Parse {
                line: 0,
                message: err.to_string(),
            },
        }
    }
}

impl From<IolError> for CliError {
    fn from(err: IolError) -> Self {
        match err {
            IolError::Model(m) => m.into(),
            IolError::InconsistentInput | IolError::NormalityRulesPresent => CliError::Parse {
                line: 0,
                message: err.to_string(),
            },
        }
    }
}

/// A parsed theory file: the theory, its queries in file order, and any
/// warnings produced during ingestion.
#[derive(Debug, Clone)]
pub struct TheoryFile {
    pub theory: Theory,
    pub queries: Vec<Query>,
    pub warnings: Vec<String>,
}

pub fn load_theory_file(path: impl AsRef<Path>) -> Result<TheoryFile, CliError> {
    let path = path.as_ref();
    let source = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_theory_source(&source)
}

pub fn parse_theory_source(source: &str) -> Result<TheoryFile, CliError> {
    let mut declared_atoms: Vec<String> = Vec::new();
    let mut gamma = Vec::new();
    let mut r_norm = Vec::new();
    let mut r_oblig = Vec::new();
    let mut queries = Vec::new();
    let mut warnings = Vec::new();

    for (lineno, raw) in source.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (directive, rest) = content.split_once(':').ok_or_else(|| CliError::Parse {
            line,
            message: "expected `directive: content`".to_string(),
        })?;
        let rest = rest.trim();
        let fail = |e: crate::formula::ParseError| CliError::Parse {
            line,
            message: e.to_string(),
        };
        match directive.trim() {
            "atoms" => {
                for atom in rest.split([' ', ',', '\t']).filter(|s| !s.is_empty()) {
                    match parse_boolean(atom) {
                        Ok(BoolFormula::Atom(name)) => declared_atoms.push(name),
                        _ => {
                            return Err(CliError::Parse {
                                line,
                                message: format!("`{atom}` is not an atom"),
                            })
                        }
                    }
                }
            }
            "fact" => gamma.push(parse_alethic(rest).map_err(fail)?),
            "default" => {
                let rule = parse_rule(rest).map_err(fail)?;
                if rule.kind != RuleKind::Normality {
                    return Err(CliError::Parse {
                        line,
                        message: "`default:` takes a normality conditional `B => H`".to_string(),
                    });
                }
                if r_norm.contains(&rule) {
                    warnings.push(format!("line {line}: duplicate default `{rule}` ignored"));
                } else {
                    r_norm.push(rule);
                }
            }
            "norm" => {
                let rule = parse_rule(rest).map_err(fail)?;
                if rule.kind != RuleKind::Obligation {
                    return Err(CliError::Parse {
                        line,
                        message: "`norm:` takes an obligation `O(H|B)`".to_string(),
                    });
                }
                if r_oblig.contains(&rule) {
                    warnings.push(format!("line {line}: duplicate norm `{rule}` ignored"));
                } else {
                    r_oblig.push(rule);
                }
            }
            "query" => queries.push(parse_query(rest).map_err(fail)?),
            other => {
                return Err(CliError::Parse {
                    line,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }

    let theory = Theory::new(gamma, r_norm, r_oblig)
        .map_err(|e| match e {
            NormsError::Prop(p) => CliError::from(p),
            NormsError::KindMismatch => CliError::Parse {
                line: 0,
                message: "rule kind mismatch".to_string(),
            },
        })?
        .with_declared_atoms(declared_atoms)
        .map_err(|e| match e {
            NormsError::Prop(p) => CliError::from(p),
            NormsError::KindMismatch => unreachable!("declared atoms carry no rules"),
        })?;
    Ok(TheoryFile {
        theory,
        queries,
        warnings,
    })
}

// ---------------------------------------------------------------------------
// check

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub vocab: Vec<String>,
    pub facts: usize,
    pub defaults: usize,
    pub norms: usize,
    pub coherent: bool,
    pub incoherent_witness: Option<Vec<String>>,
    pub defeat_edges: Vec<String>,
    pub lm_levels: Vec<Vec<String>>,
    pub partition: Vec<Vec<String>>,
}

pub fn cmd_check(file: &TheoryFile) -> CheckReport {
    let theory = &file.theory;
    let witness = incoherent_subset(theory.r_norm());
    let graph = DefeatGraph::build(theory);
    let seq = lm_sequence(theory.r_norm());
    let part = ranked_partition(&seq);
    let render_level = |level: &std::collections::BTreeSet<usize>| {
        level
            .iter()
            .map(|&i| theory.r_norm()[i].to_string())
            .collect::<Vec<_>>()
    };
    CheckReport {
        vocab: theory.vocab().atoms().to_vec(),
        facts: theory.gamma().len(),
        defaults: theory.r_norm().len(),
        norms: theory.r_oblig().len(),
        coherent: witness.is_none(),
        incoherent_witness: witness.map(|w| {
            w.into_iter()
                .map(|i| theory.r_norm()[i].to_string())
                .collect()
        }),
        defeat_edges: graph
            .edges()
            .into_iter()
            .map(|(j, i)| format!("{} overrides {}", theory.r_oblig()[j], theory.r_oblig()[i]))
            .collect(),
        lm_levels: seq.levels().iter().map(render_level).collect(),
        partition: part.levels().iter().map(render_level).collect(),
    }
}

pub fn render_check(report: &CheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vocabulary: {}", report.vocab.join(" "));
    let _ = writeln!(
        out,
        "facts: {}  defaults: {}  norms: {}",
        report.facts, report.defaults, report.norms
    );
    if report.coherent {
        let _ = writeln!(out, "coherence: ok");
    } else {
        let witness = report.incoherent_witness.as_ref().unwrap();
        let _ = writeln!(out, "coherence: FAILED, witness {{{}}}", witness.join(", "));
    }
    if report.defeat_edges.is_empty() {
        let _ = writeln!(out, "defeat graph: empty");
    } else {
        let _ = writeln!(out, "defeat graph:");
        for edge in &report.defeat_edges {
            let _ = writeln!(out, "  {edge}");
        }
    }
    let _ = writeln!(out, "exceptionality levels:");
    for (i, level) in report.lm_levels.iter().enumerate() {
        let _ = writeln!(out, "  E{i} = {{{}}}", level.join(", "));
    }
    let _ = writeln!(out, "ranked partition:");
    for (i, level) in report.partition.iter().enumerate() {
        let _ = writeln!(out, "  D{i} = {{{}}}", level.join(", "));
    }
    out
}

// ---------------------------------------------------------------------------
// rank

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMethod {
    Lex,
    Fdis,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankRow {
    pub label: String,
    pub tuple: Vec<usize>,
    pub fdis: usize,
    /// Raw obligation falsification count, with no defeat guard.
    pub naive_violations: usize,
    /// The violation set proper, as obligation indices.
    pub violated: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub method: String,
    pub vocab: Vec<String>,
    pub rows: Vec<RankRow>,
}

pub fn cmd_rank(
    file: &TheoryFile,
    method: RankMethod,
    allow_incoherent: bool,
) -> Result<RankReport, CliError> {
    let theory = &file.theory;
    let model = CanonicalModel::build(theory, &BuildOptions { allow_incoherent })?;
    let vocab = model.vocab();
    let mut rows: Vec<RankRow> = model
        .worlds()
        .into_iter()
        .map(|w| RankRow {
            label: model.label(w),
            tuple: model.tuple(w).counts().to_vec(),
            fdis: fdis_count(w, theory.r_norm(), vocab),
            naive_violations: fdis_count(w, theory.r_oblig(), vocab),
            violated: model.violation(w).iter().copied().collect(),
        })
        .collect();
    match method {
        RankMethod::Lex => rows.sort_by(|a, b| a.tuple.cmp(&b.tuple).then(a.label.cmp(&b.label))),
        RankMethod::Fdis => rows.sort_by(|a, b| a.fdis.cmp(&b.fdis).then(a.label.cmp(&b.label))),
    }
    Ok(RankReport {
        method: match method {
            RankMethod::Lex => "lex".to_string(),
            RankMethod::Fdis => "fdis".to_string(),
        },
        vocab: vocab.atoms().to_vec(),
        rows,
    })
}

pub fn render_rank(report: &RankReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", report.method);
    let width = report
        .rows
        .iter()
        .map(|r| r.label.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let _ = writeln!(out, "{:<width$}  tuple      fdis  naive  violated", "world");
    for row in &report.rows {
        let tuple = format!(
            "<{}>",
            row.tuple
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let violated = format!(
            "{{{}}}",
            row.violated
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(
            out,
            "{:<width$}  {:<9}  {:<4}  {:<5}  {violated}",
            row.label, tuple, row.fdis, row.naive_violations
        );
    }
    out
}

// ---------------------------------------------------------------------------
// query

#[derive(Debug, Clone, Serialize)]
pub struct WorldRow {
    pub label: String,
    pub tuple: Vec<usize>,
    pub falsified: Vec<usize>,
    pub violated: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct QueryRow {
    pub text: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct QueryReport {
    pub vocab: Vec<String>,
    pub worlds: Vec<WorldRow>,
    pub queries: Vec<QueryRow>,
}

impl QueryReport {
    pub fn all_entailed(&self) -> bool {
        self.queries.iter().all(|q| q.verdict)
    }
}

pub fn cmd_query(
    file: &TheoryFile,
    mode: EntailmentMode,
    allow_incoherent: bool,
) -> Result<QueryReport, CliError> {
    let theory = &file.theory;
    let opts = BuildOptions { allow_incoherent };
    let model = CanonicalModel::build(theory, &opts)?;
    let worlds = model
        .worlds()
        .into_iter()
        .map(|w| WorldRow {
            label: model.label(w),
            tuple: model.tuple(w).counts().to_vec(),
            falsified: model.falsification(w).iter().copied().collect(),
            violated: model.violation(w).iter().copied().collect(),
        })
        .collect();
    let mut queries = Vec::new();
    for query in &file.queries {
        let verdict = entails(theory, query, mode, &opts)?;
        queries.push(QueryRow {
            text: query.to_string(),
            verdict: verdict.entailed,
            witness: verdict.witness.map(|w| w.render()),
        });
    }
    Ok(QueryReport {
        vocab: theory.vocab().atoms().to_vec(),
        worlds,
        queries,
    })
}

pub fn render_query_text(report: &QueryReport) -> String {
    let mut out = String::new();
    for q in &report.queries {
        let verdict = if q.verdict { "yes" } else { "no" };
        match &q.witness {
            Some(w) => {
                let _ = writeln!(out, "{}: {verdict} (witness: {w})", q.text);
            }
            None => {
                let _ = writeln!(out, "{}: {verdict}", q.text);
            }
        }
    }
    out
}

pub fn render_query_json(report: &QueryReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

// ---------------------------------------------------------------------------
// iol

#[derive(Debug, Clone, Serialize)]
pub struct IolReport {
    pub input: String,
    pub head: String,
    pub rewritten: Vec<String>,
    pub maxfamily: Vec<Vec<usize>>,
    pub per_family: Vec<bool>,
    pub fullmeet: bool,
}

pub fn cmd_iol(file: &TheoryFile, input: &str, head: &str) -> Result<IolReport, CliError> {
    let input = parse_boolean(input).map_err(|e| CliError::Parse {
        line: 0,
        message: format!("--input: {e}"),
    })?;
    let head = parse_boolean(head).map_err(|e| CliError::Parse {
        line: 0,
        message: format!("--head: {e}"),
    })?;
    let rewritten = rewrite_defeaters(&file.theory);
    let family = maxfamily(&rewritten, &input)?;
    let per_family: Vec<bool> = family
        .members()
        .iter()
        .map(|member| out4plus_contains(member.iter().map(|&i| &rewritten[i]), &input, &head))
        .collect();
    let fullmeet = fullmeet_contains(&rewritten, &input, &head)?;
    Ok(IolReport {
        input: input.to_string(),
        head: head.to_string(),
        rewritten: rewritten.iter().map(|p| p.to_string()).collect(),
        maxfamily: family
            .members()
            .iter()
            .map(|m| m.iter().copied().collect())
            .collect(),
        per_family,
        fullmeet,
    })
}

pub fn render_iol(report: &IolReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rewritten norms:");
    for (i, pair) in report.rewritten.iter().enumerate() {
        let _ = writeln!(out, "  {i}: {pair}");
    }
    let _ = writeln!(out, "maxfamily under input {}:", report.input);
    for (member, holds) in report.maxfamily.iter().zip(&report.per_family) {
        let ids = member
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let verdict = if *holds { "yes" } else { "no" };
        let _ = writeln!(out, "  {{{ids}}} outputs {}: {verdict}", report.head);
    }
    let verdict = if report.fullmeet { "yes" } else { "no" };
    let _ = writeln!(out, "full meet outputs {}: {verdict}", report.head);
    out
}

// ---------------------------------------------------------------------------
// crosscheck

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cases: usize,
    pub hansson_agreements: usize,
    pub hansson_disagreements: usize,
    pub implication_failures: usize,
    pub bridge_failures: usize,
    pub converse_gaps: usize,
    pub failures: Vec<String>,
    pub converse_examples: Vec<String>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.hansson_disagreements == 0
            && self.implication_failures == 0
            && self.bridge_failures == 0
    }
}

/// Cross-check the file's obligation queries against the output engine.
pub fn cmd_crosscheck_file(file: &TheoryFile) -> Result<CrosscheckReport, CliError> {
    if !file.theory.r_norm().is_empty() {
        return Err(CliError::Parse {
            line: 0,
            message: "crosscheck requires a theory with no defaults".to_string(),
        });
    }
    let pairs: Vec<(BoolFormula, BoolFormula)> = file
        .queries
        .iter()
        .filter_map(|q| match q {
            Query::Obligation { body, head } | Query::ObligationHansson { body, head } => {
                Some((body.clone(), head.clone()))
            }
            _ => None,
        })
        .collect();
    if pairs.is_empty() {
        return Err(CliError::Parse {
            line: 0,
            message: "crosscheck needs at least one obligation query".to_string(),
        });
    }
    run_crosscheck(None, pairs.into_iter().map(|p| (file.theory.clone(), p)))
}

/// Cross-check seeded random theories with empty normality sets.
pub fn cmd_crosscheck_random(
    count: usize,
    atoms: usize,
    rules: usize,
    pairs_per_theory: usize,
    seed: u64,
) -> Result<CrosscheckReport, CliError> {
    if atoms == 0 || atoms > 4 || rules > 6 {
        return Err(CliError::ResourceLimit(
            "crosscheck bounds: 1..=4 atoms, at most 6 rules".to_string(),
        ));
    }
    let mut rng = rng_from_seed(seed);
    let cfg = GenConfig {
        atoms,
        norm_rules: 0,
        oblig_rules: rules,
    };
    let mut cases = Vec::new();
    for _ in 0..count {
        let theory = random_flat_theory(&mut rng, &cfg);
        for _ in 0..pairs_per_theory {
            let input = random_input(&mut rng, atoms);
            let head = random_input(&mut rng, atoms);
            cases.push((theory.clone(), (input, head)));
        }
    }
    run_crosscheck(Some(seed), cases.into_iter())
}

fn run_crosscheck(
    seed: Option<u64>,
    cases: impl Iterator<Item = (Theory, (BoolFormula, BoolFormula))>,
) -> Result<CrosscheckReport, CliError> {
    let mut report = CrosscheckReport {
        seed,
        cases: 0,
        hansson_agreements: 0,
        hansson_disagreements: 0,
        implication_failures: 0,
        bridge_failures: 0,
        converse_gaps: 0,
        failures: Vec::new(),
        converse_examples: Vec::new(),
    };
    for (theory, (input, head)) in cases {
        let check = crate::iol::faithfulness_check(&theory, &input, &head)?;
        report.cases += 1;
        if check.hansson_agrees {
            report.hansson_agreements += 1;
        } else {
            report.hansson_disagreements += 1;
            if report.failures.len() < 10 {
                report.failures.push(format!(
                    "OH({head}|{input}): preference={} output={}",
                    check.hansson_pref, check.io_member
                ));
            }
        }
        if !check.exists_forall_implied {
            report.implication_failures += 1;
            if report.failures.len() < 10 {
                report
                    .failures
                    .push(format!("O({head}|{input}): output member but not entailed"));
            }
        }
        if !check.bridge_ok {
            report.bridge_failures += 1;
            if report.failures.len() < 10 {
                report.failures.push(format!(
                    "bridge mismatch at world {} for input {input}",
                    check.bridge_mismatch.unwrap_or_default()
                ));
            }
        }
        if check.converse_gap {
            report.converse_gaps += 1;
            if report.converse_examples.len() < 10 {
                report.converse_examples.push(format!(
                    "O({head}|{input}) entailed without output membership"
                ));
            }
        }
    }
    Ok(report)
}

pub fn render_crosscheck(report: &CrosscheckReport) -> String {
    let mut out = String::new();
    if let Some(seed) = report.seed {
        let _ = writeln!(out, "seed: {seed}");
    }
    let _ = writeln!(
        out,
        "hansson agreement: {}/{} cases",
        report.hansson_agreements, report.cases
    );
    let _ = writeln!(
        out,
        "output-membership implication failures: {}",
        report.implication_failures
    );
    let _ = writeln!(out, "bridge failures: {}", report.bridge_failures);
    let _ = writeln!(
        out,
        "converse gaps (informative, not failures): {}",
        report.converse_gaps
    );
    for failure in &report.failures {
        let _ = writeln!(out, "FAIL {failure}");
    }
    for example in &report.converse_examples {
        let _ = writeln!(out, "note {example}");
    }
    let _ = writeln!(
        out,
        "verdict: {}",
        if report.passed() { "pass" } else { "FAIL" }
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ASPARAGUS: &str = "\
# etiquette
default: true => ~a
default: r => a
norm: O(~f)
norm: O(f|a)
norm: O(n)
query: O(n|a)
query: O(~f|a)
query: O(~a)
query: O(~f)
";

    #[test]
    fn parses_the_asparagus_file() {
        let file = parse_theory_source(ASPARAGUS).unwrap();
        assert_eq!(file.theory.r_norm().len(), 2);
        assert_eq!(file.theory.r_oblig().len(), 3);
        assert_eq!(file.queries.len(), 4);
        assert!(file.warnings.is_empty());
        assert_eq!(file.theory.vocab().atoms(), ["a", "f", "n", "r"]);
    }

    #[test]
    fn duplicate_rules_warn_once() {
        let source = "norm: O(~f)\nnorm: O(~f)\n";
        let file = parse_theory_source(source).unwrap();
        assert_eq!(file.theory.r_oblig().len(), 1);
        assert_eq!(file.warnings.len(), 1);
        assert!(file.warnings[0].contains("duplicate"));
    }

    #[test]
    fn unknown_directives_are_rejected() {
        let err = parse_theory_source("rule: O(~f)\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, .. }));
    }

    #[test]
    fn directive_kind_mismatch_is_a_parse_error() {
        assert!(parse_theory_source("default: O(~f)\n").is_err());
        assert!(parse_theory_source("norm: a => b\n").is_err());
    }

    #[test]
    fn check_report_on_the_asparagus_file() {
        let file = parse_theory_source(ASPARAGUS).unwrap();
        let report = cmd_check(&file);
        assert!(report.coherent);
        assert_eq!(
            report.defeat_edges,
            vec!["O(f|a) overrides O(~f)".to_string()]
        );
        assert_eq!(report.partition[0], vec!["true => ~a".to_string()]);
        assert_eq!(report.partition[1], vec!["r => a".to_string()]);
        assert!(report.partition[2].is_empty());
    }

    #[test]
    fn check_reports_incoherence_with_witness() {
        let file = parse_theory_source("default: a => b\ndefault: a => ~b\n").unwrap();
        let report = cmd_check(&file);
        assert!(!report.coherent);
        assert_eq!(
            report.incoherent_witness,
            Some(vec!["a => b".to_string(), "a => ~b".to_string()])
        );
    }

    #[test]
    fn empty_file_is_trivially_coherent() {
        let file = parse_theory_source("").unwrap();
        let report = cmd_check(&file);
        assert!(report.coherent);
        assert!(report.defeat_edges.is_empty());
    }

    #[test]
    fn query_verdicts_match_the_worked_example() {
        let file = parse_theory_source(ASPARAGUS).unwrap();
        let report = cmd_query(&file, EntailmentMode::Replete, false).unwrap();
        let verdicts: Vec<bool> = report.queries.iter().map(|q| q.verdict).collect();
        assert_eq!(verdicts, vec![true, false, false, true]);
        assert!(report.queries[2]
            .witness
            .as_deref()
            .unwrap()
            .contains("a f n"));
        assert!(!report.all_entailed());
    }

    #[test]
    fn text_and_json_encode_the_same_verdicts() {
        let file = parse_theory_source(ASPARAGUS).unwrap();
        let report = cmd_query(&file, EntailmentMode::Replete, false).unwrap();
        let text = render_query_text(&report);
        let json: serde_json::Value = serde_json::from_str(&render_query_json(&report)).unwrap();
        for (i, row) in report.queries.iter().enumerate() {
            let text_line = text.lines().nth(i).unwrap();
            let expected = if row.verdict { "yes" } else { "no" };
            assert!(text_line.contains(expected));
            assert_eq!(
                json["queries"][i]["verdict"].as_bool().unwrap(),
                row.verdict
            );
        }
    }

    #[test]
    fn rank_orders_by_class_then_label() {
        let file = parse_theory_source("default: true => ~a\ndefault: r => a\n").unwrap();
        let report = cmd_rank(&file, RankMethod::Lex, false).unwrap();
        let tuples: Vec<Vec<usize>> = report.rows.iter().map(|r| r.tuple.clone()).collect();
        assert_eq!(tuples, vec![vec![0, 0], vec![0, 1], vec![0, 1], vec![1, 0]]);
        let fdis_report = cmd_rank(&file, RankMethod::Fdis, false).unwrap();
        let counts: Vec<usize> = fdis_report.rows.iter().map(|r| r.fdis).collect();
        assert_eq!(counts, vec![0, 1, 1, 1]);
    }

    #[test]
    fn iol_report_on_the_rewritten_asparagus() {
        let file = parse_theory_source("norm: O(~f)\nnorm: O(f|a)\nnorm: O(n)\n").unwrap();
        let report = cmd_iol(&file, "a", "f").unwrap();
        assert_eq!(report.maxfamily, vec![vec![0, 1, 2]]);
        assert_eq!(report.per_family, vec![true]);
        assert!(report.fullmeet);
        assert!(!cmd_iol(&file, "a", "~f").unwrap().fullmeet);
    }

    #[test]
    fn iol_rejects_inconsistent_input() {
        let file = parse_theory_source("norm: O(~f)\n").unwrap();
        assert!(cmd_iol(&file, "a & ~a", "f").is_err());
    }

    #[test]
    fn crosscheck_random_is_reproducible() {
        let a = cmd_crosscheck_random(5, 3, 3, 2, 7).unwrap();
        let b = cmd_crosscheck_random(5, 3, 3, 2, 7).unwrap();
        assert_eq!(render_crosscheck(&a), render_crosscheck(&b));
        assert!(a.passed());
        assert_eq!(a.cases, 10);
    }

    #[test]
    fn crosscheck_file_requires_flat_theories() {
        let file = parse_theory_source("default: true => ~a\nquery: O(f|a)\n").unwrap();
        assert!(cmd_crosscheck_file(&file).is_err());
    }

    #[test]
    fn oversized_vocabularies_are_a_resource_error() {
        let atoms: Vec<String> = (0..17).map(|i| format!("x{i:02}")).collect();
        let source = format!("atoms: {}\n", atoms.join(" "));
        let err = parse_theory_source(&source).unwrap_err();
        assert!(matches!(err, CliError::ResourceLimit(_)));
        assert_eq!(err.exit_code(), EXIT_RESOURCE);
    }
}
