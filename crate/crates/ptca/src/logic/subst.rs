//! Variable substitution and free-variable computation.

use super::ast::{Formula, Sequent, Term};
use std::collections::BTreeMap;

/// A finite map from variable names to replacement terms.
pub type Renaming = BTreeMap<String, Term>;

pub fn substitute_term(t: &Term, renaming: &Renaming) -> Term {
    match t {
        Term::Zero => Term::Zero,
        Term::Var(name) => renaming.get(name).cloned().unwrap_or_else(|| t.clone()),
        Term::Succ(inner) => Term::succ(substitute_term(inner, renaming)),
    }
}

pub fn substitute_formula(f: &Formula, renaming: &Renaming) -> Formula {
    match f {
        Formula::PropVar(_) => f.clone(),
        Formula::Neg(inner) => Formula::neg(substitute_formula(inner, renaming)),
        Formula::And(l, r) => Formula::and(
            substitute_formula(l, renaming),
            substitute_formula(r, renaming),
        ),
        Formula::Or(l, r) => Formula::or(
            substitute_formula(l, renaming),
            substitute_formula(r, renaming),
        ),
        Formula::Impl(l, r) => Formula::impl_(
            substitute_formula(l, renaming),
            substitute_formula(r, renaming),
        ),
        Formula::PredAtom(p, t) => Formula::pred(*p, substitute_term(t, renaming)),
        Formula::EqAtom(l, r) => {
            Formula::eq(substitute_term(l, renaming), substitute_term(r, renaming))
        }
    }
}

/// Replaces every occurrence of each key variable, simultaneously, in
/// every formula of the sequent. There are no binders, so no capture.
pub fn substitute(s: &Sequent, renaming: &Renaming) -> Sequent {
    Sequent::new(
        s.antecedent
            .iter()
            .map(|f| substitute_formula(f, renaming))
            .collect(),
        s.succedent
            .iter()
            .map(|f| substitute_formula(f, renaming))
            .collect(),
    )
}

pub fn term_vars(t: &Term, out: &mut std::collections::BTreeSet<String>) {
    match t {
        Term::Zero => {}
        Term::Var(name) => {
            out.insert(name.clone());
        }
        Term::Succ(inner) => term_vars(inner, out),
    }
}

pub fn formula_vars(f: &Formula, out: &mut std::collections::BTreeSet<String>) {
    match f {
        Formula::PropVar(_) => {}
        Formula::Neg(inner) => formula_vars(inner, out),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) => {
            formula_vars(l, out);
            formula_vars(r, out);
        }
        Formula::PredAtom(_, t) => term_vars(t, out),
        Formula::EqAtom(l, r) => {
            term_vars(l, out);
            term_vars(r, out);
        }
    }
}

/// The set of term variable names occurring anywhere in the sequent.
/// Propositional variables do not count; only variables inside terms do.
pub fn free_vars(s: &Sequent) -> std::collections::BTreeSet<String> {
    let mut out = std::collections::BTreeSet::new();
    for f in s.antecedent.iter().chain(s.succedent.iter()) {
        formula_vars(f, &mut out);
    }
    out
}

pub fn free_vars_formula(f: &Formula) -> std::collections::BTreeSet<String> {
    let mut out = std::collections::BTreeSet::new();
    formula_vars(f, &mut out);
    out
}
