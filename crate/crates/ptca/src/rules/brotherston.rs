//! Inference rules for the inductive predicates N ("being a natural
//! number"), E ("being an even number") and O ("being an odd number"),
//! plus the case-split and substitution machinery that makes driven
//! cyclic derivations possible.
//!
//! The rule set is an ordered list: the first applicable rule in the
//! configured order fires. The default order tries the succedent
//! rewrites, then the antecedent rewrites, then the case split, then
//! substitution. The zero-introduction rules (`BR-N0-*`, `BR-E0-*`) are
//! applicable to every sequent and would starve everything after them,
//! so they participate only when a scenario lists them explicitly.
//!
//! Rewrite rules pick their principal occurrence by smallest term
//! argument first (fewest successor applications), leftmost on ties.
//! That choice is what lets a driven cell revisit earlier forms instead
//! of pushing successors outward forever.

use crate::engine::{Delta, RuleTrace, TransitionRule};
use crate::logic::{
    format_formula, format_sequent, format_term, free_vars, Formula, Pred, Sequent, Term,
};
use std::collections::BTreeSet;

pub const RULE_BR_N_R: &str = "BR-N-R";
pub const RULE_BR_E_R: &str = "BR-E-R";
pub const RULE_BR_O_R: &str = "BR-O-R";
pub const RULE_BR_N0_R: &str = "BR-N0-R";
pub const RULE_BR_E0_R: &str = "BR-E0-R";
pub const RULE_BR_N_L: &str = "BR-N-L";
pub const RULE_BR_E_L: &str = "BR-E-L";
pub const RULE_BR_O_L: &str = "BR-O-L";
pub const RULE_BR_N0_L: &str = "BR-N0-L";
pub const RULE_BR_E0_L: &str = "BR-E0-L";
pub const RULE_BR_CASE_N: &str = "BR-CASE-N";
pub const RULE_BR_SUBST: &str = "BR-SUBST";

/// Every rule the set knows, in the reading order of the rule table.
pub const BROTHERSTON_ALL_RULES: [&str; 12] = [
    RULE_BR_N_R,
    RULE_BR_E_R,
    RULE_BR_O_R,
    RULE_BR_N0_R,
    RULE_BR_E0_R,
    RULE_BR_N_L,
    RULE_BR_E_L,
    RULE_BR_O_L,
    RULE_BR_N0_L,
    RULE_BR_E0_L,
    RULE_BR_CASE_N,
    RULE_BR_SUBST,
];

/// Default trial order: the zero-introductions are left out (see the
/// module docs), everything else keeps the reading order.
pub const BROTHERSTON_DEFAULT_ORDER: [&str; 8] = [
    RULE_BR_N_R,
    RULE_BR_E_R,
    RULE_BR_O_R,
    RULE_BR_N_L,
    RULE_BR_E_L,
    RULE_BR_O_L,
    RULE_BR_CASE_N,
    RULE_BR_SUBST,
];

pub struct Brotherston {
    /// Enabled rules, in trial order.
    pub order: Vec<String>,
}

impl Default for Brotherston {
    fn default() -> Self {
        Brotherston {
            order: BROTHERSTON_DEFAULT_ORDER
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }
}

impl Brotherston {
    pub fn with_order(order: Vec<String>) -> Brotherston {
        Brotherston { order }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Antecedent,
    Succedent,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Antecedent => "antecedent",
            Side::Succedent => "succedent",
        }
    }
}

fn side_of(s: &Sequent, side: Side) -> &[Formula] {
    match side {
        Side::Antecedent => &s.antecedent,
        Side::Succedent => &s.succedent,
    }
}

fn side_of_mut(s: &mut Sequent, side: Side) -> &mut Vec<Formula> {
    match side {
        Side::Antecedent => &mut s.antecedent,
        Side::Succedent => &mut s.succedent,
    }
}

/// First variable name of the enumeration `x1, x2, ...` not in `taken`.
pub fn fresh_variable(taken: &BTreeSet<String>) -> String {
    (1..)
        .map(|i| format!("x{i}"))
        .find(|name| !taken.contains(name))
        .expect("enumeration is unbounded")
}

/// Principal occurrence of a `pred` atom on `side`: smallest argument
/// depth wins, leftmost on ties.
fn principal_occurrence(s: &Sequent, side: Side, pred: Pred) -> Option<usize> {
    side_of(s, side)
        .iter()
        .enumerate()
        .filter_map(|(i, f)| match f {
            Formula::PredAtom(p, t) if *p == pred => Some((t.depth(), i)),
            _ => None,
        })
        .min()
        .map(|(_, i)| i)
}

/// A unary rewrite `pred(t)` to `target(t+1)` on one side.
fn rewrite(
    s: &Sequent,
    side: Side,
    pred: Pred,
    target: Pred,
    rule: &'static str,
) -> Option<Delta<Sequent>> {
    let i = principal_occurrence(s, side, pred)?;
    let Formula::PredAtom(_, arg) = &side_of(s, side)[i] else {
        unreachable!()
    };
    let arg = arg.clone();
    let mut next = s.clone();
    let replacement = Formula::pred(target, Term::succ(arg.clone()));
    let trace = RuleTrace::new(rule)
        .bind("x", format_term(&arg))
        .bind("from", format_formula(&side_of(s, side)[i]))
        .bind("to", format_formula(&replacement))
        .bind("side", side.name())
        .bind("index", i.to_string());
    side_of_mut(&mut next, side)[i] = replacement;
    Some(Delta::fired(next, trace))
}

/// Appends `pred(0)` to one side. Applicable to every sequent.
fn introduce_zero(
    s: &Sequent,
    side: Side,
    pred: Pred,
    rule: &'static str,
) -> Option<Delta<Sequent>> {
    let mut next = s.clone();
    let atom = Formula::pred(pred, Term::Zero);
    let trace = RuleTrace::new(rule)
        .bind("to", format_formula(&atom))
        .bind("side", side.name());
    side_of_mut(&mut next, side).push(atom);
    Some(Delta::fired(next, trace))
}

/// The case split on N, applied premises-to-conclusion. The cell holds
/// the inductive premise `Gamma, t=x+1, N(x) |- Delta` (the equation and
/// the N atom are the last two antecedent entries), a neighbor holds the
/// base premise `Gamma, t=0 |- Delta` verbatim, and the eigenvariable
/// condition `x` not free in Gamma, Delta or N(t) must hold. The cell
/// becomes the conclusion `Gamma, N(t) |- Delta`.
fn case_n(s: &Sequent, neighbors: &[Option<&Sequent>]) -> Option<Delta<Sequent>> {
    let n = s.antecedent.len();
    if n < 2 {
        return None;
    }
    let Formula::EqAtom(t_term, succ) = &s.antecedent[n - 2] else {
        return None;
    };
    let Term::Succ(x_inner) = succ else {
        return None;
    };
    let Term::Var(x) = x_inner.as_ref() else {
        return None;
    };
    let Formula::PredAtom(Pred::Natural, Term::Var(nx)) = &s.antecedent[n - 1] else {
        return None;
    };
    if nx != x {
        return None;
    }
    let gamma = &s.antecedent[..n - 2];
    // Eigenvariable condition: x must not occur free in Gamma, Delta or
    // in the term t itself.
    let mut outside = Sequent::new(gamma.to_vec(), s.succedent.clone());
    outside
        .antecedent
        .push(Formula::pred(Pred::Natural, t_term.clone()));
    if free_vars(&outside).contains(x) {
        return None;
    }
    let mut base_ant = gamma.to_vec();
    base_ant.push(Formula::eq(t_term.clone(), Term::Zero));
    let base = Sequent::new(base_ant, s.succedent.clone());
    for (i, nb) in neighbors.iter().enumerate() {
        if *nb == Some(&base) {
            let mut conclusion_ant = gamma.to_vec();
            conclusion_ant.push(Formula::pred(Pred::Natural, t_term.clone()));
            let conclusion = Sequent::new(conclusion_ant, s.succedent.clone());
            let trace = RuleTrace::new(RULE_BR_CASE_N)
                .bind("t", format_term(t_term))
                .bind("x", x.clone())
                .bind("base", format_sequent(&base))
                .via_neighbor(i);
            return Some(Delta::fired(conclusion, trace));
        }
    }
    None
}

/// The substitution rule, triggered pattern-directedly in the direction
/// that closes driven cycles: equations rewrite successor terms into
/// their names.
///
/// Fold phase: if the sequent contains an equation `w = u` with `w` a
/// variable not occurring in `u`, and `u` occurs verbatim as a predicate
/// argument elsewhere, the leftmost such occurrence (antecedent first)
/// becomes `w`.
///
/// Abstraction phase: otherwise, if the antecedent holds `N(v)` and
/// every succedent formula is a predicate atom with argument exactly
/// `v+1`, a fresh variable `w` names that term: the equation `w = v+1`
/// is inserted in front of the `N(v)` atom and the leftmost succedent
/// occurrence becomes `w`. Later fold steps rewrite the remaining
/// occurrences one at a time.
fn substitution(s: &Sequent) -> Option<Delta<Sequent>> {
    // Fold phase.
    let all: Vec<(Side, usize, &Formula)> = s
        .antecedent
        .iter()
        .enumerate()
        .map(|(i, f)| (Side::Antecedent, i, f))
        .chain(
            s.succedent
                .iter()
                .enumerate()
                .map(|(i, f)| (Side::Succedent, i, f)),
        )
        .collect();
    for &(_, eq_index, eq) in &all {
        let Formula::EqAtom(lhs, rhs) = eq else {
            continue;
        };
        let Term::Var(w) = lhs else { continue };
        let mut rhs_vars = BTreeSet::new();
        crate::logic::term_vars(rhs, &mut rhs_vars);
        if rhs_vars.contains(w) {
            continue;
        }
        for &(side, i, f) in &all {
            let Formula::PredAtom(p, arg) = f else {
                continue;
            };
            if arg == rhs && !(side == Side::Antecedent && i == eq_index) {
                let mut next = s.clone();
                let replacement = Formula::pred(*p, Term::var(w.clone()));
                let trace = RuleTrace::new(RULE_BR_SUBST)
                    .bind("mode", "fold")
                    .bind("w", w.clone())
                    .bind("u", format_term(rhs))
                    .bind("from", format_formula(f))
                    .bind("to", format_formula(&replacement))
                    .bind("side", side.name())
                    .bind("index", i.to_string());
                side_of_mut(&mut next, side)[i] = replacement;
                return Some(Delta::fired(next, trace));
            }
        }
    }

    // Abstraction phase.
    let n_pos = s
        .antecedent
        .iter()
        .rposition(|f| matches!(f, Formula::PredAtom(Pred::Natural, Term::Var(_))))?;
    let Formula::PredAtom(_, Term::Var(v)) = &s.antecedent[n_pos] else {
        unreachable!()
    };
    let wanted = Term::succ(Term::var(v.clone()));
    if s.succedent.is_empty()
        || !s
            .succedent
            .iter()
            .all(|f| matches!(f, Formula::PredAtom(_, arg) if *arg == wanted))
    {
        return None;
    }
    let w = fresh_variable(&free_vars(s));
    let mut next = s.clone();
    let Formula::PredAtom(p0, _) = &s.succedent[0] else {
        return None;
    };
    let replacement = Formula::pred(*p0, Term::var(w.clone()));
    let trace = RuleTrace::new(RULE_BR_SUBST)
        .bind("mode", "abstract")
        .bind("w", w.clone())
        .bind("u", format_term(&wanted))
        .bind("from", format_formula(&s.succedent[0]))
        .bind("to", format_formula(&replacement))
        .bind("side", Side::Succedent.name())
        .bind("index", "0")
        .bind("eq_index", n_pos.to_string());
    next.succedent[0] = replacement;
    next.antecedent
        .insert(n_pos, Formula::eq(Term::var(w), wanted));
    Some(Delta::fired(next, trace))
}

impl TransitionRule<Sequent> for Brotherston {
    fn delta(
        &self,
        own: &Sequent,
        neighbors: &[Option<&Sequent>],
    ) -> Result<Delta<Sequent>, String> {
        for rule in &self.order {
            let fired = match rule.as_str() {
                RULE_BR_N_R => rewrite(
                    own,
                    Side::Succedent,
                    Pred::Natural,
                    Pred::Natural,
                    RULE_BR_N_R,
                ),
                RULE_BR_E_R => rewrite(own, Side::Succedent, Pred::Even, Pred::Odd, RULE_BR_E_R),
                RULE_BR_O_R => rewrite(own, Side::Succedent, Pred::Odd, Pred::Even, RULE_BR_O_R),
                RULE_BR_N0_R => introduce_zero(own, Side::Succedent, Pred::Natural, RULE_BR_N0_R),
                RULE_BR_E0_R => introduce_zero(own, Side::Succedent, Pred::Even, RULE_BR_E0_R),
                RULE_BR_N_L => rewrite(
                    own,
                    Side::Antecedent,
                    Pred::Natural,
                    Pred::Natural,
                    RULE_BR_N_L,
                ),
                RULE_BR_E_L => rewrite(own, Side::Antecedent, Pred::Even, Pred::Odd, RULE_BR_E_L),
                RULE_BR_O_L => rewrite(own, Side::Antecedent, Pred::Odd, Pred::Even, RULE_BR_O_L),
                RULE_BR_N0_L => introduce_zero(own, Side::Antecedent, Pred::Natural, RULE_BR_N0_L),
                RULE_BR_E0_L => introduce_zero(own, Side::Antecedent, Pred::Even, RULE_BR_E0_L),
                RULE_BR_CASE_N => case_n(own, neighbors),
                RULE_BR_SUBST => substitution(own),
                other => return Err(format!("unknown rule identifier {other:?}")),
            };
            if let Some(delta) = fired {
                return Ok(delta);
            }
        }
        Ok(Delta::unchanged(own.clone()))
    }

    fn name(&self) -> &'static str {
        "brotherston"
    }
}
