//! Shared proptest strategies for the integration suites.

use proptest::prelude::*;
use ptca::logic::{Formula, Pred, Sequent, Term};

pub fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        proptest::sample::select(vec!["x", "y", "z"]).prop_map(Term::var),
    ];
    leaf.prop_recursive(2, 6, 1, |inner| inner.prop_map(Term::succ))
}

pub fn formula_strategy() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        4 => proptest::sample::select(vec!["p", "q", "r", "s"]).prop_map(Formula::var),
        1 => (
            proptest::sample::select(vec![Pred::Natural, Pred::Even, Pred::Odd]),
            term_strategy()
        )
            .prop_map(|(p, t)| Formula::pred(p, t)),
        1 => (term_strategy(), term_strategy()).prop_map(|(a, b)| Formula::eq(a, b)),
    ];
    atom.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::impl_(a, b)),
        ]
    })
}

pub fn sequent_strategy() -> impl Strategy<Value = Sequent> {
    (
        proptest::collection::vec(formula_strategy(), 0..4),
        proptest::collection::vec(formula_strategy(), 0..4),
    )
        .prop_map(|(antecedent, succedent)| Sequent::new(antecedent, succedent))
}

/// Implication-only formulas, the alphabet of the modus-ponens runs.
pub fn impl_formula_strategy() -> impl Strategy<Value = Formula> {
    let atom = proptest::sample::select(vec!["p", "q", "r"]).prop_map(Formula::var);
    atom.prop_recursive(3, 12, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Formula::impl_(a, b))
    })
}
