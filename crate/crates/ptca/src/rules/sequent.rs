//! The 14-rule propositional sequent calculus (6 structural and 8
//! logical rules) as a transition rule over sequents.
//!
//! Rules are tried in a fixed order and the first applicable enabled
//! rule fires. The principal formula is always the last formula of the
//! relevant side. Rules that introduce a formula out of thin air
//! (weakening on both sides, the second conjunct of conjunction-left,
//! the second disjunct of disjunction-right) draw it from an explicit
//! per-scenario pool and are inapplicable while the pool is empty.
//! Two-premise rules read their second premise from the first matching
//! neighbor in neighborhood order.

use crate::engine::{Delta, RuleTrace, TransitionRule};
use crate::logic::{format_formula, format_formula_list, Formula, Sequent};
use std::collections::BTreeSet;

pub const RULE_SEQ_WL: &str = "SEQ-WL";
pub const RULE_SEQ_WR: &str = "SEQ-WR";
pub const RULE_SEQ_CL: &str = "SEQ-CL";
pub const RULE_SEQ_CR: &str = "SEQ-CR";
pub const RULE_SEQ_XL: &str = "SEQ-XL";
pub const RULE_SEQ_XR: &str = "SEQ-XR";
pub const RULE_SEQ_NEG_L: &str = "SEQ-NEG-L";
pub const RULE_SEQ_NEG_R: &str = "SEQ-NEG-R";
pub const RULE_SEQ_CONJ_L: &str = "SEQ-CONJ-L";
pub const RULE_SEQ_DISJ_R: &str = "SEQ-DISJ-R";
pub const RULE_SEQ_IMPL_R: &str = "SEQ-IMPL-R";
pub const RULE_SEQ_CONJ_R: &str = "SEQ-CONJ-R";
pub const RULE_SEQ_DISJ_L: &str = "SEQ-DISJ-L";
pub const RULE_SEQ_IMPL_L: &str = "SEQ-IMPL-L";

/// All 14 rule identifiers in trial order.
pub const SEQUENT_RULE_ORDER: [&str; 14] = [
    RULE_SEQ_WL,
    RULE_SEQ_WR,
    RULE_SEQ_CL,
    RULE_SEQ_CR,
    RULE_SEQ_XL,
    RULE_SEQ_XR,
    RULE_SEQ_NEG_L,
    RULE_SEQ_NEG_R,
    RULE_SEQ_CONJ_L,
    RULE_SEQ_DISJ_R,
    RULE_SEQ_IMPL_R,
    RULE_SEQ_CONJ_R,
    RULE_SEQ_DISJ_L,
    RULE_SEQ_IMPL_L,
];

#[derive(Clone, Debug)]
pub struct SequentRuleOptions {
    pub weakening_pool: Vec<Formula>,
    pub enabled: BTreeSet<String>,
}

impl Default for SequentRuleOptions {
    fn default() -> Self {
        SequentRuleOptions {
            weakening_pool: Vec::new(),
            enabled: SEQUENT_RULE_ORDER.iter().map(|s| s.to_string()).collect(),
        }
    }
}

pub struct SequentRules {
    pub opts: SequentRuleOptions,
}

impl SequentRules {
    pub fn new(opts: SequentRuleOptions) -> SequentRules {
        SequentRules { opts }
    }

    fn on(&self, rule: &str) -> bool {
        self.opts.enabled.contains(rule)
    }

    fn pool_first(&self) -> Option<&Formula> {
        self.opts.weakening_pool.first()
    }
}

/// Index of the first element that duplicates an earlier one.
fn first_duplicate(side: &[Formula]) -> Option<usize> {
    (1..side.len()).find(|&j| side[..j].contains(&side[j]))
}

/// Index of the first adjacent pair whose swap changes the sequence.
/// Swapping equal formulas would be a non-move, so such pairs are
/// skipped and the rule is inapplicable when all entries are equal.
fn first_swappable(side: &[Formula]) -> Option<usize> {
    (0..side.len().saturating_sub(1)).find(|&i| side[i] != side[i + 1])
}

fn without_index(side: &[Formula], index: usize) -> Vec<Formula> {
    let mut out = side.to_vec();
    out.remove(index);
    out
}

impl TransitionRule<Sequent> for SequentRules {
    fn delta(
        &self,
        own: &Sequent,
        neighbors: &[Option<&Sequent>],
    ) -> Result<Delta<Sequent>, String> {
        let ant = &own.antecedent;
        let suc = &own.succedent;

        if self.on(RULE_SEQ_WL) {
            if let Some(phi) = self.pool_first() {
                let mut next = own.clone();
                next.antecedent.push(phi.clone());
                let trace = RuleTrace::new(RULE_SEQ_WL).bind("phi", format_formula(phi));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_WR) {
            if let Some(phi) = self.pool_first() {
                let mut next = own.clone();
                next.succedent.push(phi.clone());
                let trace = RuleTrace::new(RULE_SEQ_WR).bind("phi", format_formula(phi));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_CL) {
            if let Some(j) = first_duplicate(ant) {
                let next = Sequent::new(without_index(ant, j), suc.clone());
                let trace = RuleTrace::new(RULE_SEQ_CL).bind("phi", format_formula(&ant[j]));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_CR) {
            if let Some(j) = first_duplicate(suc) {
                let next = Sequent::new(ant.clone(), without_index(suc, j));
                let trace = RuleTrace::new(RULE_SEQ_CR).bind("phi", format_formula(&suc[j]));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_XL) {
            if let Some(i) = first_swappable(ant) {
                let mut next = own.clone();
                next.antecedent.swap(i, i + 1);
                let trace = RuleTrace::new(RULE_SEQ_XL)
                    .bind("phi", format_formula(&ant[i]))
                    .bind("psi", format_formula(&ant[i + 1]));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_XR) {
            if let Some(i) = first_swappable(suc) {
                let mut next = own.clone();
                next.succedent.swap(i, i + 1);
                let trace = RuleTrace::new(RULE_SEQ_XR)
                    .bind("phi", format_formula(&suc[i]))
                    .bind("psi", format_formula(&suc[i + 1]));
                return Ok(Delta::fired(next, trace));
            }
        }

        // Negation introduction moves the principal formula across the
        // arrow, negated.
        if self.on(RULE_SEQ_NEG_L) {
            if let Some((phi, rest)) = suc.split_last() {
                let mut next_ant = ant.clone();
                next_ant.push(Formula::neg(phi.clone()));
                let next = Sequent::new(next_ant, rest.to_vec());
                let trace = RuleTrace::new(RULE_SEQ_NEG_L).bind("phi", format_formula(phi));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_NEG_R) {
            if let Some((phi, rest)) = ant.split_last() {
                let mut next_suc = suc.clone();
                next_suc.push(Formula::neg(phi.clone()));
                let next = Sequent::new(rest.to_vec(), next_suc);
                let trace = RuleTrace::new(RULE_SEQ_NEG_R).bind("phi", format_formula(phi));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_CONJ_L) {
            if let (Some((psi, rest)), Some(chi)) = (ant.split_last(), self.pool_first()) {
                let mut next_ant = rest.to_vec();
                next_ant.push(Formula::and(psi.clone(), chi.clone()));
                let next = Sequent::new(next_ant, suc.clone());
                let trace = RuleTrace::new(RULE_SEQ_CONJ_L)
                    .bind("psi", format_formula(psi))
                    .bind("chi", format_formula(chi));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_DISJ_R) {
            if let (Some((psi, rest)), Some(chi)) = (suc.split_last(), self.pool_first()) {
                let mut next_suc = rest.to_vec();
                next_suc.push(Formula::or(psi.clone(), chi.clone()));
                let next = Sequent::new(ant.clone(), next_suc);
                let trace = RuleTrace::new(RULE_SEQ_DISJ_R)
                    .bind("psi", format_formula(psi))
                    .bind("chi", format_formula(chi));
                return Ok(Delta::fired(next, trace));
            }
        }
        if self.on(RULE_SEQ_IMPL_R) {
            if let (Some((psi, ant_rest)), Some((chi, suc_rest))) =
                (ant.split_last(), suc.split_last())
            {
                let mut next_suc = suc_rest.to_vec();
                next_suc.push(Formula::impl_(psi.clone(), chi.clone()));
                let next = Sequent::new(ant_rest.to_vec(), next_suc);
                let trace = RuleTrace::new(RULE_SEQ_IMPL_R)
                    .bind("psi", format_formula(psi))
                    .bind("chi", format_formula(chi));
                return Ok(Delta::fired(next, trace));
            }
        }

        // Two-premise rules: the second premise comes from a neighbor.
        if self.on(RULE_SEQ_CONJ_R) {
            if let Some((psi, gamma_prime)) = suc.split_last() {
                for (i, n) in neighbors.iter().enumerate() {
                    let Some(other) = n else { continue };
                    let Some((chi, other_rest)) = other.succedent.split_last() else {
                        continue;
                    };
                    if other.antecedent == *ant && other_rest == gamma_prime {
                        let mut next_suc = gamma_prime.to_vec();
                        next_suc.push(Formula::and(psi.clone(), chi.clone()));
                        let next = Sequent::new(ant.clone(), next_suc);
                        let trace = RuleTrace::new(RULE_SEQ_CONJ_R)
                            .bind("Gamma", format_formula_list(ant))
                            .bind("GammaP", format_formula_list(gamma_prime))
                            .bind("psi", format_formula(psi))
                            .bind("chi", format_formula(chi))
                            .via_neighbor(i);
                        return Ok(Delta::fired(next, trace));
                    }
                }
            }
        }
        if self.on(RULE_SEQ_DISJ_L) {
            if let Some((psi, gamma)) = ant.split_last() {
                for (i, n) in neighbors.iter().enumerate() {
                    let Some(other) = n else { continue };
                    let Some((chi, other_rest)) = other.antecedent.split_last() else {
                        continue;
                    };
                    if other_rest == gamma && other.succedent == *suc {
                        let mut next_ant = gamma.to_vec();
                        next_ant.push(Formula::or(psi.clone(), chi.clone()));
                        let next = Sequent::new(next_ant, suc.clone());
                        let trace = RuleTrace::new(RULE_SEQ_DISJ_L)
                            .bind("Gamma", format_formula_list(gamma))
                            .bind("GammaP", format_formula_list(suc))
                            .bind("psi", format_formula(psi))
                            .bind("chi", format_formula(chi))
                            .via_neighbor(i);
                        return Ok(Delta::fired(next, trace));
                    }
                }
            }
        }
        if self.on(RULE_SEQ_IMPL_L) {
            if let Some((psi, gamma_prime)) = suc.split_last() {
                for (i, n) in neighbors.iter().enumerate() {
                    let Some(other) = n else { continue };
                    let Some((chi, delta)) = other.antecedent.split_first() else {
                        continue;
                    };
                    let mut next_ant = vec![Formula::impl_(psi.clone(), chi.clone())];
                    next_ant.extend(ant.iter().cloned());
                    next_ant.extend(delta.iter().cloned());
                    let mut next_suc = gamma_prime.to_vec();
                    next_suc.extend(other.succedent.iter().cloned());
                    let next = Sequent::new(next_ant, next_suc);
                    let trace = RuleTrace::new(RULE_SEQ_IMPL_L)
                        .bind("Gamma", format_formula_list(ant))
                        .bind("GammaP", format_formula_list(gamma_prime))
                        .bind("psi", format_formula(psi))
                        .bind("chi", format_formula(chi))
                        .bind("Delta", format_formula_list(delta))
                        .bind("DeltaP", format_formula_list(&other.succedent))
                        .via_neighbor(i);
                    return Ok(Delta::fired(next, trace));
                }
            }
        }

        Ok(Delta::unchanged(own.clone()))
    }

    fn name(&self) -> &'static str {
        "sequent"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_formula, parse_sequent};

    fn s(text: &str) -> Sequent {
        parse_sequent(text).unwrap()
    }

    fn only(rules: &[&str]) -> SequentRules {
        SequentRules::new(SequentRuleOptions {
            weakening_pool: Vec::new(),
            enabled: rules.iter().map(|r| r.to_string()).collect(),
        })
    }

    fn run(rule: &SequentRules, own: &str, neighbors: &[&str]) -> Delta<Sequent> {
        let own = s(own);
        let parsed: Vec<Sequent> = neighbors.iter().map(|n| s(n)).collect();
        let refs: Vec<Option<&Sequent>> = parsed.iter().map(Some).collect();
        rule.delta(&own, &refs).unwrap()
    }

    #[test]
    fn conjunction_right_with_matching_neighbor() {
        let d = run(&only(&[RULE_SEQ_CONJ_R]), "p => q, r", &["p => q, s"]);
        assert_eq!(d.state, s("p => q, r&s"));
        assert_eq!(d.fired.unwrap().rule, RULE_SEQ_CONJ_R);
    }

    #[test]
    fn two_premise_rules_need_a_matching_neighbor() {
        let rules = only(&[RULE_SEQ_CONJ_R, RULE_SEQ_DISJ_L, RULE_SEQ_IMPL_L]);
        // Implication-left matches any neighbor with a nonempty
        // antecedent, so exclude it by using an empty-antecedent one.
        let d = run(&rules, "p => q", &["=> q, s"]);
        assert_eq!(d.state, s("p => q"));
        assert!(d.fired.is_none());
    }

    #[test]
    fn implication_left_instantiation() {
        let d = run(&only(&[RULE_SEQ_IMPL_L]), "p => q, r", &["s, t => u"]);
        assert_eq!(d.state, s("r->s, p, t => q, u"));
        let trace = d.fired.unwrap();
        assert_eq!(trace.rule, RULE_SEQ_IMPL_L);
        assert_eq!(trace.binding("psi"), Some("r"));
        assert_eq!(trace.binding("chi"), Some("s"));
    }

    #[test]
    fn disjunction_left_instantiation() {
        let d = run(&only(&[RULE_SEQ_DISJ_L]), "p, q => r", &["p, s => r"]);
        assert_eq!(d.state, s("p, q|s => r"));
    }

    #[test]
    fn weakening_draws_from_pool_in_order() {
        let rules = SequentRules::new(SequentRuleOptions {
            weakening_pool: vec![parse_formula("a").unwrap(), parse_formula("b").unwrap()],
            enabled: [RULE_SEQ_WL].iter().map(|r| r.to_string()).collect(),
        });
        let d = run(&rules, "p => q", &[]);
        assert_eq!(d.state, s("p, a => q"));
        // Empty pool makes weakening inapplicable.
        let d = run(&only(&[RULE_SEQ_WL, RULE_SEQ_WR]), "p => q", &[]);
        assert!(d.fired.is_none());
    }

    #[test]
    fn contraction_collapses_first_duplicate() {
        let d = run(&only(&[RULE_SEQ_CL]), "p, q, p, p => r", &[]);
        assert_eq!(d.state, s("p, q, p => r"));
    }

    #[test]
    fn exchange_swaps_first_unequal_pair() {
        let d = run(&only(&[RULE_SEQ_XR]), "=> p, p, q, r", &[]);
        assert_eq!(d.state, s("=> p, q, p, r"));
        // All-equal side: nothing to exchange.
        let d = run(&only(&[RULE_SEQ_XR]), "=> p, p", &[]);
        assert!(d.fired.is_none());
    }

    #[test]
    fn negation_moves_principal_across_arrow() {
        let d = run(&only(&[RULE_SEQ_NEG_L]), "p => q, r", &[]);
        assert_eq!(d.state, s("p, ~r => q"));
        let d = run(&only(&[RULE_SEQ_NEG_R]), "p, q => r", &[]);
        assert_eq!(d.state, s("p => r, ~q"));
    }

    #[test]
    fn implication_right() {
        let d = run(&only(&[RULE_SEQ_IMPL_R]), "p, q => r, s", &[]);
        assert_eq!(d.state, s("p => r, q->s"));
    }

    #[test]
    fn conjunction_left_uses_pool() {
        let rules = SequentRules::new(SequentRuleOptions {
            weakening_pool: vec![parse_formula("c").unwrap()],
            enabled: [RULE_SEQ_CONJ_L].iter().map(|r| r.to_string()).collect(),
        });
        let d = run(&rules, "p, q => r", &[]);
        assert_eq!(d.state, s("p, q&c => r"));
    }

    #[test]
    fn first_enabled_rule_wins() {
        // Contraction-left precedes negation-left in the order.
        let d = run(&only(&SEQUENT_RULE_ORDER), "p, p => q", &[]);
        assert_eq!(d.state, s("p => q"));
        assert_eq!(d.fired.unwrap().rule, RULE_SEQ_CL);
    }
}
