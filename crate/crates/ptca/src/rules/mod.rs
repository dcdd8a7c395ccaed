//! The logical transition rules: modus ponens over the implication
//! language, the five-rule Hilbert-style system over negation and
//! disjunction, the 14-rule propositional sequent calculus, and the
//! inductive predicate rules with case split and substitution.
//!
//! Every rule is a total deterministic function: when no case applies
//! the cell keeps its state. Each fired case reports a [`RuleTrace`]
//! whose bindings re-derive the output from the input.
//!
//! [`RuleTrace`]: crate::engine::RuleTrace

mod brotherston;
mod mp;
mod sequent;
mod shoenfield;

pub use brotherston::{
    fresh_variable, Brotherston, BROTHERSTON_ALL_RULES, BROTHERSTON_DEFAULT_ORDER, RULE_BR_CASE_N,
    RULE_BR_E0_L, RULE_BR_E0_R, RULE_BR_E_L, RULE_BR_E_R, RULE_BR_N0_L, RULE_BR_N0_R, RULE_BR_N_L,
    RULE_BR_N_R, RULE_BR_O_L, RULE_BR_O_R, RULE_BR_SUBST,
};
pub use mp::{ModusPonens, RULE_MP};
pub use sequent::{
    SequentRuleOptions, SequentRules, RULE_SEQ_CL, RULE_SEQ_CONJ_L, RULE_SEQ_CONJ_R, RULE_SEQ_CR,
    RULE_SEQ_DISJ_L, RULE_SEQ_DISJ_R, RULE_SEQ_IMPL_L, RULE_SEQ_IMPL_R, RULE_SEQ_NEG_L,
    RULE_SEQ_NEG_R, RULE_SEQ_WL, RULE_SEQ_WR, RULE_SEQ_XL, RULE_SEQ_XR, SEQUENT_RULE_ORDER,
};
pub use shoenfield::{Shoenfield, RULE_SH1, RULE_SH2, RULE_SH3, RULE_SH4, RULE_SH5};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::TransitionRule;
    use crate::logic::{parse_sequent, EqualityMode, Sequent};

    fn s(text: &str) -> Sequent {
        parse_sequent(text).unwrap()
    }

    /// Driven-cycle walkthrough: the evolving cell next to a scripted
    /// neighbor revisits alpha-equivalent states with period 10. The
    /// expected states were derived by hand-applying each rule.
    #[test]
    fn brotherston_driven_cycle_by_hand() {
        let rule = Brotherston::with_order(
            [RULE_BR_CASE_N, RULE_BR_SUBST, RULE_BR_E_R, RULE_BR_O_R]
                .iter()
                .map(|r| r.to_string())
                .collect(),
        );
        // The scripted neighbor's state at each time step.
        let neighbor_at = |t: u64| -> Sequent {
            match t % 10 {
                4 => s("x1=0 => E(x1), O(x1)"),
                9 => s("x2=0 => O(x2), E(x2)"),
                _ => s("z=0 =>"),
            }
        };
        let expected = [
            "N(z) => O(z), E(z)",
            "N(z) => O(z), O(z+1)",
            "N(z) => E(z+1), O(z+1)",
            "x1=z+1, N(z) => E(x1), O(z+1)",
            "x1=z+1, N(z) => E(x1), O(x1)",
            "N(x1) => E(x1), O(x1)",
            "N(x1) => O(x1+1), O(x1)",
            "N(x1) => O(x1+1), E(x1+1)",
            "x2=x1+1, N(x1) => O(x2), E(x1+1)",
            "x2=x1+1, N(x1) => O(x2), E(x2)",
            "N(x2) => O(x2), E(x2)",
            "N(x2) => O(x2), O(x2+1)",
            "N(x2) => E(x2+1), O(x2+1)",
            "x1=x2+1, N(x2) => E(x1), O(x2+1)",
            "x1=x2+1, N(x2) => E(x1), O(x1)",
            "N(x1) => E(x1), O(x1)",
        ];
        let mut state = s(expected[0]);
        for t in 0..expected.len() as u64 - 1 {
            let nb = neighbor_at(t);
            let delta = rule.delta(&state, &[None, Some(&nb)]).unwrap();
            state = delta.state;
            assert_eq!(
                state,
                s(expected[t as usize + 1]),
                "mismatch stepping t={t}"
            );
        }
        // Alpha-equivalence of the states ten steps apart, and exact
        // recurrence of the second cycle.
        let alpha = EqualityMode::AlphaEquivalent;
        for t in 0..expected.len() - 10 {
            assert!(
                alpha.sequents_equal(&s(expected[t]), &s(expected[t + 10])),
                "alpha period at t={t}"
            );
        }
        assert_eq!(s(expected[5]), s(expected[15]));
        // The five-step shift must not close the cycle: the two
        // abstraction phases differ in which predicate gets named first.
        assert!(!alpha.sequents_equal(&s(expected[3]), &s(expected[8])));
    }

    #[test]
    fn brotherston_rewrite_targets() {
        let rule = Brotherston::default();
        let d = rule.delta(&s("=> E(y)"), &[]).unwrap();
        assert_eq!(d.state, s("=> O(y+1)"));
        assert_eq!(d.fired.unwrap().rule, RULE_BR_E_R);

        let d = rule.delta(&s("O(y) =>"), &[]).unwrap();
        assert_eq!(d.state, s("E(y+1) =>"));
        assert_eq!(d.fired.unwrap().rule, RULE_BR_O_L);

        let d = rule.delta(&s("=> N(0)"), &[]).unwrap();
        assert_eq!(d.state, s("=> N(0+1)"));
        assert_eq!(d.fired.unwrap().rule, RULE_BR_N_R);
    }

    #[test]
    fn brotherston_picks_smallest_argument_occurrence() {
        let rule = Brotherston::default();
        // Two odd atoms; the bare-variable one is rewritten even though
        // it is not the last.
        let d = rule.delta(&s("N(z) => O(z), O(z+1)"), &[]).unwrap();
        assert_eq!(d.state, s("N(z) => E(z+1), O(z+1)"));
        // Leftmost wins ties.
        let d = rule.delta(&s("=> O(a), O(b)"), &[]).unwrap();
        assert_eq!(d.state, s("=> E(a+1), O(b)"));
    }

    #[test]
    fn brotherston_without_predicate_content_is_fixed() {
        let rule = Brotherston::default();
        let nb = s("r => t");
        let d = rule.delta(&s("p => q"), &[Some(&nb)]).unwrap();
        assert_eq!(d.state, s("p => q"));
        assert!(d.fired.is_none());
    }

    #[test]
    fn zero_introduction_only_when_listed() {
        let rule = Brotherston::with_order(vec![RULE_BR_N0_R.to_string()]);
        let d = rule.delta(&s("p => q"), &[]).unwrap();
        assert_eq!(d.state, s("p => q, N(0)"));
        assert_eq!(d.fired.unwrap().rule, RULE_BR_N0_R);
    }

    #[test]
    fn case_n_respects_eigenvariable_condition() {
        let rule = Brotherston::with_order(vec![RULE_BR_CASE_N.to_string()]);
        // z occurs free in the succedent: the split must not fire.
        let own = s("x1=z+1, N(z) => E(z)");
        let base = s("x1=0 => E(z)");
        let d = rule.delta(&own, &[Some(&base)]).unwrap();
        assert!(d.fired.is_none());

        // Eigenvariable fresh: fires and produces the conclusion.
        let own = s("x1=z+1, N(z) => E(x1), O(x1)");
        let base = s("x1=0 => E(x1), O(x1)");
        let d = rule.delta(&own, &[Some(&base)]).unwrap();
        assert_eq!(d.state, s("N(x1) => E(x1), O(x1)"));
        let trace = d.fired.unwrap();
        assert_eq!(trace.rule, RULE_BR_CASE_N);
        assert_eq!(trace.neighbor_used, Some(0));
    }

    #[test]
    fn case_n_requires_exact_base_premise() {
        let rule = Brotherston::with_order(vec![RULE_BR_CASE_N.to_string()]);
        let own = s("x1=z+1, N(z) => E(x1), O(x1)");
        // Wrong succedent order in the would-be base premise.
        let base = s("x1=0 => O(x1), E(x1)");
        let d = rule.delta(&own, &[Some(&base)]).unwrap();
        assert!(d.fired.is_none());
    }

    #[test]
    fn substitution_fold_rewrites_leftmost_occurrence() {
        let rule = Brotherston::with_order(vec![RULE_BR_SUBST.to_string()]);
        let d = rule
            .delta(&s("x1=z+1, N(z) => E(z+1), O(z+1)"), &[])
            .unwrap();
        assert_eq!(d.state, s("x1=z+1, N(z) => E(x1), O(z+1)"));
        let trace = d.fired.unwrap();
        assert_eq!(trace.binding("mode"), Some("fold"));
    }

    #[test]
    fn substitution_abstracts_uniform_successor_succedent() {
        let rule = Brotherston::with_order(vec![RULE_BR_SUBST.to_string()]);
        let d = rule.delta(&s("N(z) => E(z+1), O(z+1)"), &[]).unwrap();
        assert_eq!(d.state, s("x1=z+1, N(z) => E(x1), O(z+1)"));
        let trace = d.fired.unwrap();
        assert_eq!(trace.binding("mode"), Some("abstract"));
        // Mixed succedent arguments: no abstraction.
        let d = rule.delta(&s("N(z) => O(z), O(z+1)"), &[]).unwrap();
        assert!(d.fired.is_none());
    }

    #[test]
    fn fresh_variable_skips_taken_names() {
        let mut taken = std::collections::BTreeSet::new();
        assert_eq!(fresh_variable(&taken), "x1");
        taken.insert("x1".to_string());
        taken.insert("x2".to_string());
        assert_eq!(fresh_variable(&taken), "x3");
    }
}
