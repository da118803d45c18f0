//! Recursive-descent parser for the ASCII surface syntax.
//!
//! Precedence (tightest first): `~`, `&`, `|`, `->`, `<->`, with `->` and
//! `<->` right-associative. Inside `O(..)`/`OH(..)` a top-level `|` separates
//! head from body, so disjunctive heads must be parenthesized there.

use super::{AlethicFormula, BoolFormula, Query, Rule};
use std::fmt;
use thiserror::Error;

/// Syntax error with a byte position into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    True,
    False,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    IffArrow,
    FatArrow,
    LParen,
    RParen,
    BoxOp,
    DiamondOp,
    Oblig,
    ObligH,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Atom(name) => return write!(f, "atom `{name}`"),
            Tok::True => "`true`",
            Tok::False => "`false`",
            Tok::Tilde => "`~`",
            Tok::Amp => "`&`",
            Tok::Pipe => "`|`",
            Tok::Arrow => "`->`",
            Tok::IffArrow => "`<->`",
            Tok::FatArrow => "`=>`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::BoxOp => "`[]`",
            Tok::DiamondOp => "`<>`",
            Tok::Oblig => "`O`",
            Tok::ObligH => "`OH`",
            Tok::Eof => "end of input",
        };
        write!(f, "{s}")
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '~' => {
                out.push((Tok::Tilde, i));
                i += 1;
            }
            '&' => {
                out.push((Tok::Amp, i));
                i += 1;
            }
            '|' => {
                out.push((Tok::Pipe, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((Tok::Arrow, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `->`"));
                }
            }
            '<' => {
                if input[i..].starts_with("<->") {
                    out.push((Tok::IffArrow, i));
                    i += 3;
                } else if input[i..].starts_with("<>") {
                    out.push((Tok::DiamondOp, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `<->` or `<>`"));
                }
            }
            '=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((Tok::FatArrow, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `=>`"));
                }
            }
            '[' => {
                if bytes.get(i + 1) == Some(&b']') {
                    out.push((Tok::BoxOp, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `[]`"));
                }
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase()
                        || bytes[i].is_ascii_digit()
                        || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &input[start..i];
                let tok = match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    _ => Tok::Atom(word.to_string()),
                };
                out.push((tok, start));
            }
            'A'..='Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_uppercase() {
                    i += 1;
                }
                let word = &input[start..i];
                let tok = match word {
                    "O" => Tok::Oblig,
                    "OH" => Tok::ObligH,
                    _ => {
                        return Err(ParseError::new(
                            start,
                            format!("unknown operator `{word}` (expected `O` or `OH`)"),
                        ))
                    }
                };
                out.push((tok, start));
            }
            _ => return Err(ParseError::new(i, format!("unexpected character `{c}`"))),
        }
    }
    out.push((Tok::Eof, input.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(input)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        tok
    }

    fn expect(&mut self, want: &Tok) -> Result<(), ParseError> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::new(
                self.pos(),
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(ParseError::new(
                self.pos(),
                format!("unexpected {} after formula", self.peek()),
            ))
        }
    }

    // ---- Boolean grammar -------------------------------------------------

    fn bool_formula(&mut self, allow_or: bool) -> Result<BoolFormula, ParseError> {
        self.bool_iff(allow_or)
    }

    fn bool_iff(&mut self, allow_or: bool) -> Result<BoolFormula, ParseError> {
        let lhs = self.bool_impl(allow_or)?;
        if *self.peek() == Tok::IffArrow {
            self.bump();
            let rhs = self.bool_iff(allow_or)?;
            Ok(lhs.iff(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn bool_impl(&mut self, allow_or: bool) -> Result<BoolFormula, ParseError> {
        let lhs = self.bool_or(allow_or)?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.bool_impl(allow_or)?;
            Ok(lhs.implies(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn bool_or(&mut self, allow_or: bool) -> Result<BoolFormula, ParseError> {
        let mut lhs = self.bool_and()?;
        while allow_or && *self.peek() == Tok::Pipe {
            self.bump();
            let rhs = self.bool_and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn bool_and(&mut self) -> Result<BoolFormula, ParseError> {
        let mut lhs = self.bool_unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.bool_unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    // The separator context never reaches operands: parentheses reset it.
    fn bool_unary(&mut self) -> Result<BoolFormula, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Tilde => Ok(self.bool_unary()?.not()),
            Tok::True => Ok(BoolFormula::Top),
            Tok::False => Ok(BoolFormula::Bottom),
            Tok::Atom(name) => Ok(BoolFormula::Atom(name)),
            Tok::LParen => {
                // Parentheses reset the separator context.
                let inner = self.bool_formula(true)?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            tok @ (Tok::BoxOp | Tok::DiamondOp | Tok::Oblig | Tok::ObligH) => Err(ParseError::new(
                pos,
                format!("{tok} is not allowed inside a Boolean context (operators do not nest)"),
            )),
            tok => Err(ParseError::new(
                pos,
                format!("expected a formula, found {tok}"),
            )),
        }
    }

    // ---- Alethic grammar -------------------------------------------------

    fn alethic_formula(&mut self) -> Result<AlethicFormula, ParseError> {
        self.alethic_iff()
    }

    fn alethic_iff(&mut self) -> Result<AlethicFormula, ParseError> {
        let lhs = self.alethic_impl()?;
        if *self.peek() == Tok::IffArrow {
            self.bump();
            let rhs = self.alethic_iff()?;
            Ok(lhs.iff(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn alethic_impl(&mut self) -> Result<AlethicFormula, ParseError> {
        let lhs = self.alethic_or()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.alethic_impl()?;
            Ok(lhs.implies(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn alethic_or(&mut self) -> Result<AlethicFormula, ParseError> {
        let mut lhs = self.alethic_and()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            let rhs = self.alethic_and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn alethic_and(&mut self) -> Result<AlethicFormula, ParseError> {
        let mut lhs = self.alethic_unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.alethic_unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn alethic_unary(&mut self) -> Result<AlethicFormula, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Tilde => Ok(self.alethic_unary()?.not()),
            Tok::True => Ok(AlethicFormula::Bool(BoolFormula::Top)),
            Tok::False => Ok(AlethicFormula::Bool(BoolFormula::Bottom)),
            Tok::Atom(name) => Ok(AlethicFormula::Bool(BoolFormula::Atom(name))),
            Tok::BoxOp => Ok(AlethicFormula::Nec(self.bool_unary()?)),
            Tok::DiamondOp => Ok(AlethicFormula::Poss(self.bool_unary()?)),
            Tok::LParen => {
                let inner = self.alethic_formula()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            tok @ (Tok::Oblig | Tok::ObligH) => Err(ParseError::new(
                pos,
                format!("{tok} is only allowed at the top level of a query"),
            )),
            tok => Err(ParseError::new(
                pos,
                format!("expected a formula, found {tok}"),
            )),
        }
    }

    /// `O(head)`, `O(head|body)` and the `OH` variants. The head is parsed
    /// with `|` acting as the separator; the body takes the full grammar.
    fn obligation_tail(&mut self) -> Result<(BoolFormula, BoolFormula), ParseError> {
        self.expect(&Tok::LParen)?;
        let head = self.bool_formula(false)?;
        let body = if *self.peek() == Tok::Pipe {
            self.bump();
            self.bool_formula(true)?
        } else {
            BoolFormula::Top
        };
        self.expect(&Tok::RParen)?;
        Ok((body, head))
    }

    fn query(&mut self) -> Result<Query, ParseError> {
        match self.peek() {
            Tok::Oblig => {
                self.bump();
                let (body, head) = self.obligation_tail()?;
                self.expect_eof()?;
                Ok(Query::Obligation { body, head })
            }
            Tok::ObligH => {
                self.bump();
                let (body, head) = self.obligation_tail()?;
                self.expect_eof()?;
                Ok(Query::ObligationHansson { body, head })
            }
            _ => {
                let pos = self.pos();
                let lhs = self.alethic_formula()?;
                if *self.peek() == Tok::FatArrow {
                    self.bump();
                    let body = lhs.as_boolean().ok_or_else(|| {
                        ParseError::new(pos, "the body of `=>` must be purely Boolean")
                    })?;
                    let head = self.bool_formula(true)?;
                    self.expect_eof()?;
                    Ok(Query::Normality { body, head })
                } else {
                    self.expect_eof()?;
                    Ok(Query::Alethic(lhs))
                }
            }
        }
    }
}

/// Parse a purely Boolean formula.
pub fn parse_boolean(input: &str) -> Result<BoolFormula, ParseError> {
    let mut p = Parser::new(input)?;
    let formula = p.bool_formula(true)?;
    p.expect_eof()?;
    Ok(formula)
}

/// Parse a flat alethic formula (`[]`/`<>` over Boolean operands).
pub fn parse_alethic(input: &str) -> Result<AlethicFormula, ParseError> {
    let mut p = Parser::new(input)?;
    let formula = p.alethic_formula()?;
    p.expect_eof()?;
    Ok(formula)
}

/// Parse a query: `O(H|B)`, `OH(H|B)`, `B => H`, or an alethic formula.
pub fn parse_query(input: &str) -> Result<Query, ParseError> {
    Parser::new(input)?.query()
}

/// Parse a rule: `B => H` (normality) or `O(H|B)` (obligation).
pub fn parse_rule(input: &str) -> Result<Rule, ParseError> {
    match parse_query(input)? {
        Query::Normality { body, head } => Ok(Rule::normality(body, head)),
        Query::Obligation { body, head } => Ok(Rule::obligation(body, head)),
        _ => Err(ParseError::new(0, "expected a rule (`B => H` or `O(H|B)`)")),
    }
}
