//! Formula ASTs for the restricted language: Boolean formulas, flat alethic
//! formulas (modal depth at most one), rules, and queries.
//!
//! The surface syntax is plain ASCII: `~ & | -> <->` for the Boolean
//! connectives, `true`/`false` for the constants, `[]`/`<>` for necessity and
//! possibility, `B => H` for a normality conditional, and `O(H|B)` /
//! `OH(H|B)` for conditional obligations (`O(H)` abbreviates `O(H|true)`).
//! Atoms are lowercase identifiers. Modal and conditional operators never
//! nest; the parser rejects any attempt rather than flattening it.

mod parse;

pub use parse::{parse_alethic, parse_boolean, parse_query, parse_rule, ParseError};

use std::collections::BTreeSet;
use std::fmt;

/// A formula of classical propositional logic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolFormula {
    Top,
    Bottom,
    Atom(String),
    Not(Box<BoolFormula>),
    And(Box<BoolFormula>, Box<BoolFormula>),
    Or(Box<BoolFormula>, Box<BoolFormula>),
    Implies(Box<BoolFormula>, Box<BoolFormula>),
    Iff(Box<BoolFormula>, Box<BoolFormula>),
}

impl BoolFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        BoolFormula::Atom(name.into())
    }

    // Part of the `and`/`or`/`implies`/`iff` builder family.
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        BoolFormula::Not(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        BoolFormula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        BoolFormula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Self) -> Self {
        BoolFormula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Self) -> Self {
        BoolFormula::Iff(Box::new(self), Box::new(other))
    }

    /// Conjunction of a sequence, `true` when empty.
    pub fn conjoin(parts: impl IntoIterator<Item = BoolFormula>) -> Self {
        let mut iter = parts.into_iter();
        match iter.next() {
            None => BoolFormula::Top,
            Some(first) => iter.fold(first, |acc, f| acc.and(f)),
        }
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            BoolFormula::Top | BoolFormula::Bottom => {}
            BoolFormula::Atom(name) => {
                out.insert(name.clone());
            }
            BoolFormula::Not(inner) => inner.collect_atoms(out),
            BoolFormula::And(a, b)
            | BoolFormula::Or(a, b)
            | BoolFormula::Implies(a, b)
            | BoolFormula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

/// A flat alethic formula: Boolean combinations of Boolean formulas and
/// `[]`/`<>` applied to Boolean formulas. Flatness is guaranteed by
/// construction, since the modal constructors only accept [`BoolFormula`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlethicFormula {
    Bool(BoolFormula),
    Nec(BoolFormula),
    Poss(BoolFormula),
    Not(Box<AlethicFormula>),
    And(Box<AlethicFormula>, Box<AlethicFormula>),
    Or(Box<AlethicFormula>, Box<AlethicFormula>),
    Implies(Box<AlethicFormula>, Box<AlethicFormula>),
    Iff(Box<AlethicFormula>, Box<AlethicFormula>),
}

impl AlethicFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        AlethicFormula::Not(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        AlethicFormula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        AlethicFormula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Self) -> Self {
        AlethicFormula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Self) -> Self {
        AlethicFormula::Iff(Box::new(self), Box::new(other))
    }

    /// The purely Boolean content, if no modal operator occurs.
    pub fn as_boolean(&self) -> Option<BoolFormula> {
        match self {
            AlethicFormula::Bool(b) => Some(b.clone()),
            AlethicFormula::Nec(_) | AlethicFormula::Poss(_) => None,
            AlethicFormula::Not(inner) => inner.as_boolean().map(BoolFormula::not),
            AlethicFormula::And(a, b) => Some(a.as_boolean()?.and(b.as_boolean()?)),
            AlethicFormula::Or(a, b) => Some(a.as_boolean()?.or(b.as_boolean()?)),
            AlethicFormula::Implies(a, b) => Some(a.as_boolean()?.implies(b.as_boolean()?)),
            AlethicFormula::Iff(a, b) => Some(a.as_boolean()?.iff(b.as_boolean()?)),
        }
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            AlethicFormula::Bool(b) | AlethicFormula::Nec(b) | AlethicFormula::Poss(b) => {
                b.collect_atoms(out)
            }
            AlethicFormula::Not(inner) => inner.collect_atoms(out),
            AlethicFormula::And(a, b)
            | AlethicFormula::Or(a, b)
            | AlethicFormula::Implies(a, b)
            | AlethicFormula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

/// Rule flavor: a soft normality conditional or a conditional obligation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleKind {
    Normality,
    Obligation,
}

/// A conditional rule with a Boolean body and head.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub kind: RuleKind,
    pub body: BoolFormula,
    pub head: BoolFormula,
}

impl Rule {
    pub fn normality(body: BoolFormula, head: BoolFormula) -> Self {
        Rule {
            kind: RuleKind::Normality,
            body,
            head,
        }
    }

    pub fn obligation(body: BoolFormula, head: BoolFormula) -> Self {
        Rule {
            kind: RuleKind::Obligation,
            body,
            head,
        }
    }

    /// The material implication `body -> head`.
    pub fn materialize(&self) -> BoolFormula {
        self.body.clone().implies(self.head.clone())
    }
}

/// A query posed against a theory.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Query {
    Alethic(AlethicFormula),
    Normality {
        body: BoolFormula,
        head: BoolFormula,
    },
    Obligation {
        body: BoolFormula,
        head: BoolFormula,
    },
    ObligationHansson {
        body: BoolFormula,
        head: BoolFormula,
    },
}

/// The atoms occurring syntactically in `items`, in lexicographic order.
pub fn atoms_of<'a, T: HasAtoms + 'a>(items: impl IntoIterator<Item = &'a T>) -> Vec<String> {
    let mut set = BTreeSet::new();
    for item in items {
        item.collect_atoms(&mut set);
    }
    set.into_iter().collect()
}

/// Anything whose atoms can be collected.
pub trait HasAtoms {
    fn collect_atoms(&self, out: &mut BTreeSet<String>);

    fn atoms(&self) -> Vec<String> {
        let mut set = BTreeSet::new();
        self.collect_atoms(&mut set);
        set.into_iter().collect()
    }
}

impl HasAtoms for BoolFormula {
    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        BoolFormula::collect_atoms(self, out)
    }
}

impl HasAtoms for AlethicFormula {
    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        AlethicFormula::collect_atoms(self, out)
    }
}

impl HasAtoms for Rule {
    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        self.body.collect_atoms(out);
        self.head.collect_atoms(out);
    }
}

impl HasAtoms for Query {
    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Query::Alethic(f) => f.collect_atoms(out),
            Query::Normality { body, head }
            | Query::Obligation { body, head }
            | Query::ObligationHansson { body, head } => {
                body.collect_atoms(out);
                head.collect_atoms(out);
            }
        }
    }
}

// Precedence levels used by the printers: higher binds tighter.
const PREC_IFF: u8 = 1;
const PREC_IMPLIES: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_UNARY: u8 = 5;

impl BoolFormula {
    fn prec(&self) -> u8 {
        match self {
            BoolFormula::Top | BoolFormula::Bottom | BoolFormula::Atom(_) | BoolFormula::Not(_) => {
                PREC_UNARY
            }
            BoolFormula::And(_, _) => PREC_AND,
            BoolFormula::Or(_, _) => PREC_OR,
            BoolFormula::Implies(_, _) => PREC_IMPLIES,
            BoolFormula::Iff(_, _) => PREC_IFF,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let my = self.prec();
        let parens = my < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            BoolFormula::Top => write!(f, "true")?,
            BoolFormula::Bottom => write!(f, "false")?,
            BoolFormula::Atom(name) => write!(f, "{name}")?,
            BoolFormula::Not(inner) => {
                write!(f, "~")?;
                inner.fmt_prec(f, PREC_UNARY)?;
            }
            // & and | are left-associative, -> and <-> right-associative.
            BoolFormula::And(a, b) => {
                a.fmt_prec(f, PREC_AND)?;
                write!(f, " & ")?;
                b.fmt_prec(f, PREC_AND + 1)?;
            }
            BoolFormula::Or(a, b) => {
                a.fmt_prec(f, PREC_OR)?;
                write!(f, " | ")?;
                b.fmt_prec(f, PREC_OR + 1)?;
            }
            BoolFormula::Implies(a, b) => {
                a.fmt_prec(f, PREC_IMPLIES + 1)?;
                write!(f, " -> ")?;
                b.fmt_prec(f, PREC_IMPLIES)?;
            }
            BoolFormula::Iff(a, b) => {
                a.fmt_prec(f, PREC_IFF + 1)?;
                write!(f, " <-> ")?;
                b.fmt_prec(f, PREC_IFF)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }

    /// True when printing this formula bare could expose a top-level `|`,
    /// which would collide with the head/body separator inside `O(..)`.
    fn exposes_or(&self) -> bool {
        match self {
            BoolFormula::Or(_, _) => true,
            BoolFormula::And(a, b) | BoolFormula::Implies(a, b) | BoolFormula::Iff(a, b) => {
                a.exposes_or() || b.exposes_or()
            }
            _ => false,
        }
    }
}

impl fmt::Display for BoolFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl AlethicFormula {
    fn prec(&self) -> u8 {
        match self {
            AlethicFormula::Bool(b) => b.prec(),
            AlethicFormula::Nec(_) | AlethicFormula::Poss(_) | AlethicFormula::Not(_) => PREC_UNARY,
            AlethicFormula::And(_, _) => PREC_AND,
            AlethicFormula::Or(_, _) => PREC_OR,
            AlethicFormula::Implies(_, _) => PREC_IMPLIES,
            AlethicFormula::Iff(_, _) => PREC_IFF,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let my = self.prec();
        let parens = my < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            AlethicFormula::Bool(b) => b.fmt_prec(f, if parens { 0 } else { min })?,
            AlethicFormula::Nec(b) => {
                write!(f, "[]")?;
                b.fmt_prec(f, PREC_UNARY)?;
            }
            AlethicFormula::Poss(b) => {
                write!(f, "<>")?;
                b.fmt_prec(f, PREC_UNARY)?;
            }
            AlethicFormula::Not(inner) => {
                write!(f, "~")?;
                inner.fmt_prec(f, PREC_UNARY)?;
            }
            AlethicFormula::And(a, b) => {
                a.fmt_prec(f, PREC_AND)?;
                write!(f, " & ")?;
                b.fmt_prec(f, PREC_AND + 1)?;
            }
            AlethicFormula::Or(a, b) => {
                a.fmt_prec(f, PREC_OR)?;
                write!(f, " | ")?;
                b.fmt_prec(f, PREC_OR + 1)?;
            }
            AlethicFormula::Implies(a, b) => {
                a.fmt_prec(f, PREC_IMPLIES + 1)?;
                write!(f, " -> ")?;
                b.fmt_prec(f, PREC_IMPLIES)?;
            }
            AlethicFormula::Iff(a, b) => {
                a.fmt_prec(f, PREC_IFF + 1)?;
                write!(f, " <-> ")?;
                b.fmt_prec(f, PREC_IFF)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for AlethicFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

fn fmt_obligation(
    f: &mut fmt::Formatter<'_>,
    op: &str,
    body: &BoolFormula,
    head: &BoolFormula,
) -> fmt::Result {
    write!(f, "{op}(")?;
    if head.exposes_or() {
        write!(f, "({head})")?;
    } else {
        write!(f, "{head}")?;
    }
    if *body != BoolFormula::Top {
        write!(f, "|{body}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RuleKind::Normality => {
                write!(f, "{} => {}", self.body, self.head)
            }
            RuleKind::Obligation => fmt_obligation(f, "O", &self.body, &self.head),
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Alethic(a) => write!(f, "{a}"),
            Query::Normality { body, head } => write!(f, "{body} => {head}"),
            Query::Obligation { body, head } => fmt_obligation(f, "O", body, head),
            Query::ObligationHansson { body, head } => fmt_obligation(f, "OH", body, head),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> BoolFormula {
        BoolFormula::atom("a")
    }

    fn f() -> BoolFormula {
        BoolFormula::atom("f")
    }

    #[test]
    fn atoms_are_ordered_and_deduplicated() {
        let phi = a().and(f().not()).or(a());
        assert_eq!(phi.atoms(), vec!["a".to_string(), "f".to_string()]);
        assert_eq!(BoolFormula::Top.atoms(), Vec::<String>::new());
    }

    #[test]
    fn atoms_of_theory_parts() {
        // The four atoms of the running etiquette example.
        let rules = [
            Rule::normality(BoolFormula::Top, a().not()),
            Rule::normality(BoolFormula::atom("r"), a()),
            Rule::obligation(BoolFormula::Top, f().not()),
            Rule::obligation(a(), f()),
            Rule::obligation(BoolFormula::Top, BoolFormula::atom("n")),
        ];
        assert_eq!(atoms_of(rules.iter()), vec!["a", "f", "n", "r"]);
    }

    #[test]
    fn display_uses_minimal_parens() {
        let phi = a().and(f().not());
        assert_eq!(phi.to_string(), "a & ~f");
        let psi = a().or(f()).and(a());
        assert_eq!(psi.to_string(), "(a | f) & a");
        let chained = a().implies(f().implies(a()));
        assert_eq!(chained.to_string(), "a -> f -> a");
        let left = a().implies(f()).implies(a());
        assert_eq!(left.to_string(), "(a -> f) -> a");
    }

    #[test]
    fn obligation_display_guards_separator() {
        let r = Rule::obligation(BoolFormula::Top, a().or(f()));
        assert_eq!(r.to_string(), "O((a | f))");
        let dyadic = Rule::obligation(a(), f());
        assert_eq!(dyadic.to_string(), "O(f|a)");
        // An | nested under -> would print bare without the guard.
        let tricky = Rule::obligation(a(), a().implies(f().or(a())));
        assert_eq!(tricky.to_string(), "O((a -> f | a)|a)");
    }

    #[test]
    fn as_boolean_rejects_modal_content() {
        let pure = AlethicFormula::Bool(a()).and(AlethicFormula::Bool(f()));
        assert_eq!(pure.as_boolean(), Some(a().and(f())));
        let modal = AlethicFormula::Nec(a()).and(AlethicFormula::Bool(f()));
        assert_eq!(modal.as_boolean(), None);
    }
}
