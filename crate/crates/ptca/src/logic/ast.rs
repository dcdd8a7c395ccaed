//! Abstract syntax for the formula and sequent languages.

use std::fmt;

/// First-order terms: zero, variables and successor. These are the only
/// term formers the predicate rules ever need.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    Var(String),
    Succ(Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn succ(inner: Term) -> Term {
        Term::Succ(Box::new(inner))
    }

    /// Number of successor applications wrapped around the leaf.
    pub fn depth(&self) -> usize {
        match self {
            Term::Succ(t) => 1 + t.depth(),
            _ => 0,
        }
    }
}

/// Unary predicates over terms: natural, even, odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pred {
    Natural,
    Even,
    Odd,
}

impl Pred {
    pub fn letter(self) -> char {
        match self {
            Pred::Natural => 'N',
            Pred::Even => 'E',
            Pred::Odd => 'O',
        }
    }

    pub fn from_letter(c: char) -> Option<Pred> {
        match c {
            'N' => Some(Pred::Natural),
            'E' => Some(Pred::Even),
            'O' => Some(Pred::Odd),
            _ => None,
        }
    }
}

impl fmt::Display for Pred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Propositional formulas extended with predicate and equality atoms.
/// Binary connectives are never flattened: `p|(q|r)` and `(p|q)|r` are
/// distinct values, which the associativity rewrite rule relies on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    PropVar(String),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    PredAtom(Pred, Term),
    EqAtom(Term, Term),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::PropVar(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn impl_(l: Formula, r: Formula) -> Formula {
        Formula::Impl(Box::new(l), Box::new(r))
    }

    pub fn pred(p: Pred, t: Term) -> Formula {
        Formula::PredAtom(p, t)
    }

    pub fn eq(l: Term, r: Term) -> Formula {
        Formula::EqAtom(l, r)
    }
}

/// A sequent with ordered sides. Storage always preserves the order the
/// formulas were written in; set-like comparison is an equality-mode
/// concern, not a storage one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sequent {
    pub antecedent: Vec<Formula>,
    pub succedent: Vec<Formula>,
}

impl Sequent {
    pub fn new(antecedent: Vec<Formula>, succedent: Vec<Formula>) -> Sequent {
        Sequent {
            antecedent,
            succedent,
        }
    }
}
