//! The seven reaction rules and the metaoperations that lift them from
//! species to clusters and mixtures.

use super::mixture::{Cluster, Mixture};
use super::species::Species;
use crate::engine::{Delta, RuleTrace, TransitionRule};
use std::collections::BTreeSet;

use Species::*;

/// One reaction: a reactant species turns into a product cluster when
/// each required premise species is found in a distinct neighbor cell.
#[derive(Clone, Debug)]
pub struct ReactionSpec {
    pub rule_id: u8,
    pub reactant: Species,
    pub required_premises: &'static [Species],
    pub product: &'static [Species],
}

pub const REACTIONS: [ReactionSpec; 7] = [
    ReactionSpec {
        rule_id: 1,
        reactant: Cerium3,
        required_premises: &[BromousAcid, Bromate, Hydron],
        product: &[Cerium4, BromousAcid, Water],
    },
    ReactionSpec {
        rule_id: 2,
        reactant: Cerium4,
        required_premises: &[BromoMalonicAcid, Water],
        product: &[Bromide, Cerium3, FormicAcid, CarbonDioxide, Hydron],
    },
    ReactionSpec {
        rule_id: 3,
        reactant: BromousAcid,
        required_premises: &[],
        product: &[HypobromousAcid, Bromate, Hydron],
    },
    ReactionSpec {
        rule_id: 4,
        reactant: Bromate,
        required_premises: &[Bromide, Hydron],
        product: &[HypobromousAcid, BromousAcid],
    },
    ReactionSpec {
        rule_id: 5,
        reactant: Bromide,
        required_premises: &[BromousAcid, Hydron],
        product: &[HypobromousAcid],
    },
    ReactionSpec {
        rule_id: 6,
        reactant: HypobromousAcid,
        required_premises: &[Bromide, Hydron],
        product: &[Bromine, Water],
    },
    ReactionSpec {
        rule_id: 7,
        reactant: Bromine,
        required_premises: &[MalonicAcid],
        product: &[Bromide, Hydron, BromoMalonicAcid],
    },
];

/// The reaction whose reactant is `s`, if any. Each species is the
/// reactant of at most one rule; the six species without one are fixed
/// points on their own.
pub fn reaction_for(s: Species) -> Option<&'static ReactionSpec> {
    REACTIONS.iter().find(|r| r.reactant == s)
}

/// Searches for an injective assignment of each required premise
/// occurrence to a distinct neighbor cell whose mixture contains that
/// species anywhere in any cluster. The cell's own state never supplies
/// its own premises. Backtracking assigns premises in listed order to
/// the smallest usable neighbor index, which yields the
/// lexicographically first perfect matching under neighbor scan order.
pub fn premises_available(
    required: &[Species],
    neighbors: &[Option<&Mixture>],
) -> Option<Vec<(Species, usize)>> {
    fn assign(
        required: &[Species],
        neighbors: &[Option<&Mixture>],
        used: &mut [bool],
        acc: &mut Vec<(Species, usize)>,
    ) -> bool {
        let Some((&first, rest)) = required.split_first() else {
            return true;
        };
        for (i, nb) in neighbors.iter().enumerate() {
            if used[i] {
                continue;
            }
            let Some(mixture) = nb else { continue };
            if mixture.contains_species(first) {
                used[i] = true;
                acc.push((first, i));
                if assign(rest, neighbors, used, acc) {
                    return true;
                }
                acc.pop();
                used[i] = false;
            }
        }
        false
    }

    let mut used = vec![false; neighbors.len()];
    let mut acc = Vec::with_capacity(required.len());
    assign(required, neighbors, &mut used, &mut acc).then_some(acc)
}

/// Applies the reaction table to one species: the product cluster when
/// its rule exists and the premises are available, absent otherwise.
pub fn species_step(s: Species, neighbors: &[Option<&Mixture>]) -> Option<Cluster> {
    let spec = reaction_for(s)?;
    premises_available(spec.required_premises, neighbors)?;
    Some(Cluster::new(spec.product.to_vec()).expect("products are nonempty"))
}

/// Evaluates every part of a cluster independently against the same
/// neighborhood snapshot. When nothing reacts the cluster survives
/// unchanged; when any part reacts, the changed parts emit their
/// product clusters and the unchanged sibling parts are dropped.
pub fn cluster_step(c: &Cluster, neighbors: &[Option<&Mixture>]) -> (Vec<Cluster>, Vec<u8>) {
    let mut products = Vec::new();
    let mut fired = Vec::new();
    for &part in c.parts() {
        if let Some(product) = species_step(part, neighbors) {
            fired.push(
                reaction_for(part)
                    .expect("reacting species has a rule")
                    .rule_id,
            );
            products.push(product);
        }
    }
    if products.is_empty() {
        (vec![c.clone()], fired)
    } else {
        (products, fired)
    }
}

/// True when some species of the cluster is usable as a premise: a
/// neighbor cell hosts a reactant whose rule lists that species among
/// its required premises.
fn usable_as_premise(c: &Cluster, neighbors: &[Option<&Mixture>]) -> bool {
    c.parts().iter().any(|&species| {
        neighbors.iter().flatten().any(|nb| {
            nb.species().any(|reactant| {
                reaction_for(reactant).is_some_and(|spec| spec.required_premises.contains(&species))
            })
        })
    })
}

/// Outcome details of one mixture transition, for reporting.
pub struct MixtureStep {
    pub mixture: Mixture,
    pub fired_rules: Vec<u8>,
    pub retained: usize,
    pub dropped: usize,
    pub collapsed: bool,
}

/// Steps a whole mixture: every cluster steps independently; when any
/// cluster changed, an unchanged cluster is retained only if one of its
/// species is usable as a premise by a neighbor-hosted reactant.
/// Finally duplicates collapse (when `idempotency` is on) and the
/// result is canonically ordered.
pub fn mixture_step(m: &Mixture, neighbors: &[Option<&Mixture>], idempotency: bool) -> MixtureStep {
    let stepped: Vec<(&Cluster, Vec<Cluster>, Vec<u8>)> = m
        .clusters()
        .iter()
        .map(|c| {
            let (products, fired) = cluster_step(c, neighbors);
            (c, products, fired)
        })
        .collect();
    let any_changed = stepped.iter().any(|(_, _, fired)| !fired.is_empty());

    let mut out = Vec::new();
    let mut fired_rules = BTreeSet::new();
    let mut retained = 0;
    let mut dropped = 0;
    for (original, products, fired) in stepped {
        if !fired.is_empty() {
            fired_rules.extend(fired);
            out.extend(products);
        } else if !any_changed || usable_as_premise(original, neighbors) {
            if any_changed {
                retained += 1;
            }
            out.push(original.clone());
        } else {
            dropped += 1;
        }
    }

    let mixture = Mixture::new(out).expect("a step never empties a mixture");
    let deduped = if idempotency {
        mixture.deduplicate()
    } else {
        mixture.clone()
    };
    let collapsed = deduped != mixture;
    MixtureStep {
        mixture: deduped,
        fired_rules: fired_rules.into_iter().collect(),
        retained,
        dropped,
        collapsed,
    }
}

/// The mixture automaton rule: the conjunction of the seven reactions,
/// realized by evaluating every rule at every part of every cluster in
/// each step.
pub struct BzRule {
    pub idempotency: bool,
}

impl Default for BzRule {
    fn default() -> Self {
        BzRule { idempotency: true }
    }
}

impl TransitionRule<Mixture> for BzRule {
    fn delta(
        &self,
        own: &Mixture,
        neighbors: &[Option<&Mixture>],
    ) -> Result<Delta<Mixture>, String> {
        let step = mixture_step(own, neighbors, self.idempotency);
        if step.mixture == *own {
            return Ok(Delta::unchanged(step.mixture));
        }
        let mut trace = RuleTrace::new("BZ").bind(
            "reactions",
            step.fired_rules
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        if step.retained > 0 {
            trace = trace.bind("retained", step.retained.to_string());
        }
        if step.dropped > 0 {
            trace = trace.bind("dropped", step.dropped.to_string());
        }
        if step.collapsed {
            trace = trace.bind("collapsed", "yes");
        }
        Ok(Delta::fired(step.mixture, trace))
    }

    fn name(&self) -> &'static str {
        "bz"
    }
}
