//! Modus ponens as a transition rule over the implication language.

use crate::engine::{Delta, RuleTrace, TransitionRule};
use crate::logic::{format_formula, Formula};

/// If the cell holds `phi -> psi` and some neighbor holds exactly `phi`,
/// the cell becomes `psi`; otherwise it keeps its state. The neighbor
/// scan follows neighborhood order, but the choice cannot affect the
/// output: `phi` and `psi` are fixed by the cell's own top-level shape.
pub struct ModusPonens;

pub const RULE_MP: &str = "MP";

impl TransitionRule<Formula> for ModusPonens {
    fn delta(
        &self,
        own: &Formula,
        neighbors: &[Option<&Formula>],
    ) -> Result<Delta<Formula>, String> {
        if let Formula::Impl(antecedent, consequent) = own {
            for (i, n) in neighbors.iter().enumerate() {
                if let Some(state) = n {
                    if *state == antecedent.as_ref() {
                        let trace = RuleTrace::new(RULE_MP)
                            .bind("phi", format_formula(antecedent))
                            .bind("psi", format_formula(consequent))
                            .via_neighbor(i);
                        return Ok(Delta::fired(consequent.as_ref().clone(), trace));
                    }
                }
            }
        }
        Ok(Delta::unchanged(own.clone()))
    }

    fn name(&self) -> &'static str {
        "mp"
    }
}
