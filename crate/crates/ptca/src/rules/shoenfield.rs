//! The five-rule Hilbert-style system over negation and disjunction,
//! realized as an exclusive disjunction of cases: the first applicable
//! case in the listed order fires.

use crate::engine::{Delta, RuleTrace, TransitionRule};
use crate::logic::{format_formula, Formula};

pub const RULE_SH1: &str = "SH1"; // expansion
pub const RULE_SH2: &str = "SH2"; // contraction
pub const RULE_SH3: &str = "SH3"; // associativity
pub const RULE_SH4: &str = "SH4"; // cut, own on the positive side
pub const RULE_SH5: &str = "SH5"; // cut, own on the negated side

/// Case order: expansion, contraction, associativity, cut-left,
/// cut-right. Expansion rewrites any state whenever any neighbor is
/// present (binding the unconstrained metavariable to the first
/// neighbor), which starves every later case, so it is disabled by
/// default and enabled per scenario.
#[derive(Default)]
pub struct Shoenfield {
    pub expansion_enabled: bool,
}

impl TransitionRule<Formula> for Shoenfield {
    fn delta(
        &self,
        own: &Formula,
        neighbors: &[Option<&Formula>],
    ) -> Result<Delta<Formula>, String> {
        // (1) expansion: own phi, any neighbor psi -> psi | phi
        if self.expansion_enabled {
            if let Some((i, psi)) = neighbors
                .iter()
                .enumerate()
                .find_map(|(i, n)| n.map(|s| (i, s)))
            {
                let out = Formula::or(psi.clone(), own.clone());
                let trace = RuleTrace::new(RULE_SH1)
                    .bind("phi", format_formula(own))
                    .bind("psi", format_formula(psi))
                    .via_neighbor(i);
                return Ok(Delta::fired(out, trace));
            }
        }

        // (2) contraction: phi | phi -> phi
        if let Formula::Or(l, r) = own {
            if l == r {
                let trace = RuleTrace::new(RULE_SH2).bind("phi", format_formula(l));
                return Ok(Delta::fired(l.as_ref().clone(), trace));
            }
        }

        // (3) associativity: chi | (psi | phi) -> (chi | psi) | phi
        if let Formula::Or(chi, rest) = own {
            if let Formula::Or(psi, phi) = rest.as_ref() {
                let out = Formula::or(
                    Formula::or(chi.as_ref().clone(), psi.as_ref().clone()),
                    phi.as_ref().clone(),
                );
                let trace = RuleTrace::new(RULE_SH3)
                    .bind("chi", format_formula(chi))
                    .bind("psi", format_formula(psi))
                    .bind("phi", format_formula(phi));
                return Ok(Delta::fired(out, trace));
            }
        }

        // (4) cut: own phi | chi, neighbor ~phi | psi -> chi | psi
        if let Formula::Or(phi, chi) = own {
            for (i, n) in neighbors.iter().enumerate() {
                let Some(state) = n else { continue };
                if let Formula::Or(neg, psi) = state {
                    if let Formula::Neg(inner) = neg.as_ref() {
                        if inner.as_ref() == phi.as_ref() {
                            let out = Formula::or(chi.as_ref().clone(), psi.as_ref().clone());
                            let trace = RuleTrace::new(RULE_SH4)
                                .bind("phi", format_formula(phi))
                                .bind("chi", format_formula(chi))
                                .bind("psi", format_formula(psi))
                                .via_neighbor(i);
                            return Ok(Delta::fired(out, trace));
                        }
                    }
                }
            }
        }

        // (5) cut: own ~phi | psi, neighbor phi | chi -> chi | psi
        if let Formula::Or(neg, psi) = own {
            if let Formula::Neg(phi) = neg.as_ref() {
                for (i, n) in neighbors.iter().enumerate() {
                    let Some(state) = n else { continue };
                    if let Formula::Or(l, chi) = state {
                        if l.as_ref() == phi.as_ref() {
                            let out = Formula::or(chi.as_ref().clone(), psi.as_ref().clone());
                            // A neighbor of the shape phi | ~phi maps the
                            // state to itself; that is no application.
                            if out == *own {
                                continue;
                            }
                            let trace = RuleTrace::new(RULE_SH5)
                                .bind("phi", format_formula(phi))
                                .bind("psi", format_formula(psi))
                                .bind("chi", format_formula(chi))
                                .via_neighbor(i);
                            return Ok(Delta::fired(out, trace));
                        }
                    }
                }
            }
        }

        Ok(Delta::unchanged(own.clone()))
    }

    fn name(&self) -> &'static str {
        "shoenfield"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn run(rule: &Shoenfield, own: &str, neighbors: &[Option<&str>]) -> Delta<Formula> {
        let own = f(own);
        let parsed: Vec<Option<Formula>> = neighbors.iter().map(|n| n.map(f)).collect();
        let refs: Vec<Option<&Formula>> = parsed.iter().map(|n| n.as_ref()).collect();
        rule.delta(&own, &refs).unwrap()
    }

    #[test]
    fn contraction() {
        let d = run(&Shoenfield::default(), "p|p", &[Some("q")]);
        assert_eq!(d.state, f("p"));
        assert_eq!(d.fired.unwrap().rule, RULE_SH2);
    }

    #[test]
    fn associativity() {
        let d = run(&Shoenfield::default(), "p|(q|r)", &[]);
        assert_eq!(d.state, f("(p|q)|r"));
        assert_eq!(d.fired.unwrap().rule, RULE_SH3);
    }

    #[test]
    fn cut_from_positive_side() {
        let d = run(&Shoenfield::default(), "p|q", &[Some("~p|r")]);
        assert_eq!(d.state, f("q|r"));
        let trace = d.fired.unwrap();
        assert_eq!(trace.rule, RULE_SH4);
        assert_eq!(trace.neighbor_used, Some(0));
    }

    #[test]
    fn cut_from_negated_side() {
        let d = run(&Shoenfield::default(), "~p|r", &[Some("p|q")]);
        assert_eq!(d.state, f("q|r"));
        assert_eq!(d.fired.unwrap().rule, RULE_SH5);
    }

    #[test]
    fn expansion_binds_first_neighbor() {
        let rule = Shoenfield {
            expansion_enabled: true,
        };
        let d = run(&rule, "q", &[Some("r"), Some("s")]);
        assert_eq!(d.state, f("r|q"));
        let trace = d.fired.unwrap();
        assert_eq!(trace.rule, RULE_SH1);
        assert_eq!(trace.neighbor_used, Some(0));
        // With expansion off, an atom with no other case is fixed.
        let d = run(&Shoenfield::default(), "q", &[Some("r")]);
        assert!(d.fired.is_none());
    }

    #[test]
    fn earlier_case_shadows_later() {
        // Contraction applies before cut even when a cut partner exists.
        let d = run(&Shoenfield::default(), "p|p", &[Some("~p|r")]);
        assert_eq!(d.state, f("p"));
        assert_eq!(d.fired.unwrap().rule, RULE_SH2);
    }

    #[test]
    fn no_case_applies() {
        let d = run(&Shoenfield::default(), "~p", &[Some("q")]);
        assert_eq!(d.state, f("~p"));
        assert!(d.fired.is_none());
    }
}
