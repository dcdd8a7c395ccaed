//! Recursive-descent parser for the formula and sequent syntax.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! sequent  := formulas '=>' formulas
//! formulas := (formula (',' formula)*)?
//! formula  := or ('->' formula)?          implication, right-associative
//! or       := and ('|' and)*              left-associative
//! and      := unary ('&' unary)*          left-associative
//! unary    := '~' unary | atom
//! atom     := term '=' term | PRED '(' term ')' | ident | '(' formula ')'
//! term     := primary ('+' '1')*
//! primary  := '0' | ident | '(' term ')'
//! ```
//!
//! Precedence from tightest to loosest: `~`, `&`, `|`, `->`. PRED is one
//! of the letters `N`, `E`, `O`; a bare occurrence of those letters (not
//! followed by `(`) is an ordinary propositional variable.

use super::ast::{Formula, Pred, Sequent, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("lexical error at {pos}: unexpected character {ch:?}")]
    Lexical { pos: usize, ch: char },
    #[error("syntax error at {pos}: found {found}, expected {expected}")]
    Syntax {
        pos: usize,
        found: String,
        expected: &'static str,
    },
    #[error("arity error at {pos}: predicate {pred} takes exactly one term argument")]
    PredicateArity { pos: usize, pred: char },
    #[error("syntax error at {pos}: a sequent contains exactly one '=>'")]
    ExtraSequentArrow { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(u64),
    LParen,
    RParen,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    SeqArrow,
    Equals,
    Comma,
    Plus,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Number(n) => format!("number {n}"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Amp => "'&'".into(),
            Tok::Pipe => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::SeqArrow => "'=>'".into(),
            Tok::Equals => "'='".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '~' => {
                toks.push((Tok::Tilde, i));
                i += 1;
            }
            '&' => {
                toks.push((Tok::Amp, i));
                i += 1;
            }
            '|' => {
                toks.push((Tok::Pipe, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Arrow, i));
                    i += 2;
                } else {
                    return Err(ParseError::Lexical { pos: i, ch: '-' });
                }
            }
            '=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::SeqArrow, i));
                    i += 2;
                } else {
                    toks.push((Tok::Equals, i));
                    i += 1;
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: u64 = text[start..i]
                    .parse()
                    .map_err(|_| ParseError::Lexical { pos: start, ch: c })?;
                toks.push((Tok::Number(n), start));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            other => return Err(ParseError::Lexical { pos: i, ch: other }),
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            found: self.peek().describe(),
            expected,
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.or_level()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let right = self.formula()?;
            Ok(Formula::impl_(left, right))
        } else {
            Ok(left)
        }
    }

    fn or_level(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and_level()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            let rhs = self.and_level()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and_level(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Tilde {
            self.bump();
            let inner = self.unary()?;
            Ok(Formula::neg(inner))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        // An atom starting with a term followed by '=' is an equality atom.
        // Terms and formulas share identifiers and parentheses, so probe
        // for `term '='` first and roll back if it is not there.
        let save = self.at;
        if let Ok(lhs) = self.term() {
            if *self.peek() == Tok::Equals {
                self.bump();
                let rhs = self.term()?;
                return Ok(Formula::eq(lhs, rhs));
            }
        }
        self.at = save;

        match self.peek().clone() {
            Tok::Ident(name) => {
                let pred = if name.len() == 1 {
                    Pred::from_letter(name.chars().next().unwrap())
                } else {
                    None
                };
                if let Some(p) = pred {
                    if self.toks[self.at + 1].0 == Tok::LParen {
                        let pred_pos = self.pos();
                        self.bump();
                        self.bump();
                        let arg = self.term()?;
                        if *self.peek() == Tok::Comma {
                            return Err(ParseError::PredicateArity {
                                pos: pred_pos,
                                pred: p.letter(),
                            });
                        }
                        self.expect(&Tok::RParen, "')' closing the predicate argument")?;
                        return Ok(Formula::pred(p, arg));
                    }
                }
                self.bump();
                Ok(Formula::var(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.term_primary()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            match self.bump() {
                Tok::Number(1) => acc = Term::succ(acc),
                _ => {
                    self.at -= 1;
                    return Err(self.unexpected("'1' after '+'"));
                }
            }
        }
        Ok(acc)
    }

    fn term_primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Number(0) => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::Ident(name) => {
                // `N(` here means a predicate atom, not a term.
                if self.toks[self.at + 1].0 == Tok::LParen {
                    return Err(self.unexpected("a term"));
                }
                self.bump();
                Ok(Term::var(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.term()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn formula_list(&mut self, stop_ok: bool) -> Result<Vec<Formula>, ParseError> {
        let mut out = Vec::new();
        if matches!(self.peek(), Tok::SeqArrow | Tok::End) && stop_ok {
            return Ok(out);
        }
        out.push(self.formula()?);
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.formula()?);
        }
        Ok(out)
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}

/// Parses a comma-separated, possibly empty, list of formulas.
pub fn parse_formula_list(text: &str) -> Result<Vec<Formula>, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let fs = p.formula_list(true)?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(fs)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let antecedent = p.formula_list(true)?;
    p.expect(&Tok::SeqArrow, "'=>'")?;
    let succedent = p.formula_list(true)?;
    if *p.peek() == Tok::SeqArrow {
        return Err(ParseError::ExtraSequentArrow { pos: p.pos() });
    }
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(Sequent::new(antecedent, succedent))
}
