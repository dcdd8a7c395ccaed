//! The oscillating-reaction automaton: a 13-species alphabet, coupled
//! clusters, mixtures as multisets of clusters, seven reaction rules
//! gated by premise availability in distinct neighbor cells, and the
//! metaoperations that lift species reactions to whole mixtures.

mod mixture;
mod reactions;
mod species;

pub use mixture::{format_mixture, parse_mixture, Cluster, Mixture};
pub use reactions::{
    cluster_step, mixture_step, premises_available, reaction_for, species_step, BzRule,
    MixtureStep, ReactionSpec, REACTIONS,
};
pub use species::{MixtureParseError, Species, ALL_SPECIES};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::TransitionRule;

    fn m(text: &str) -> Mixture {
        parse_mixture(text).unwrap()
    }

    fn neighbors(texts: &[Option<&str>]) -> Vec<Option<Mixture>> {
        texts.iter().map(|t| t.map(m)).collect()
    }

    fn refs(parsed: &[Option<Mixture>]) -> Vec<Option<&Mixture>> {
        parsed.iter().map(|n| n.as_ref()).collect()
    }

    #[test]
    fn parse_and_format_round_trip() {
        let one = m("Ce4+ (+) HBrO2 (+) H2O");
        assert_eq!(one.clusters().len(), 1);
        assert_eq!(one.clusters()[0].parts().len(), 3);
        assert_eq!(format_mixture(&one), "Ce4+ (+) HBrO2 (+) H2O");

        let single = m("H+");
        assert_eq!(single.clusters().len(), 1);
        assert_eq!(single.clusters()[0].parts(), [Species::Hydron]);

        let two = m("Br2 (+) H2O, HOBr (+) HBrO2");
        assert_eq!(two.clusters().len(), 2);
        assert_eq!(m(&format_mixture(&two)), two);

        assert!(parse_mixture("NaCl").is_err());
        assert!(parse_mixture("H+ (+) ").is_err());
        assert!(parse_mixture("").is_err());
    }

    #[test]
    fn species_symbols_are_distinct_and_round_trip() {
        let mut seen = std::collections::BTreeSet::new();
        for s in ALL_SPECIES {
            assert!(seen.insert(s.symbol()), "duplicate symbol {}", s.symbol());
            assert_eq!(Species::from_symbol(s.symbol()).unwrap(), s);
            // No symbol contains the cluster separator.
            assert!(!s.symbol().contains("(+)"));
        }
        assert_eq!(seen.len(), 13);
    }

    #[test]
    fn mixture_equality_is_multiset_equality() {
        assert_eq!(m("Br2 (+) H2O, HOBr"), m("HOBr, Br2 (+) H2O"));
        // Cluster parts keep their order: coupling is not commutative.
        assert_ne!(m("Br2 (+) H2O"), m("H2O (+) Br2"));
        // Multiplicity matters until idempotent collapse.
        assert_ne!(m("HOBr, HOBr"), m("HOBr"));
        assert_eq!(m("HOBr, HOBr").deduplicate(), m("HOBr"));
    }

    #[test]
    fn premise_assignment_requires_distinct_cells() {
        use Species::*;
        // Both premises only in one cell: no injective assignment.
        let ns = neighbors(&[Some("Br- (+) H+")]);
        assert_eq!(premises_available(&[Bromide, Hydron], &refs(&ns)), None);
        // Same premises spread over two cells: assignment found.
        let ns = neighbors(&[Some("Br- (+) H+"), Some("H+")]);
        assert_eq!(
            premises_available(&[Bromide, Hydron], &refs(&ns)),
            Some(vec![(Bromide, 0), (Hydron, 1)])
        );
        // Empty requirement always succeeds.
        assert_eq!(premises_available(&[], &refs(&[])), Some(vec![]));
    }

    #[test]
    fn ignition_premises_assign_to_the_three_top_row_cells() {
        use Species::*;
        // The center cell's Moore neighborhood at time zero; the three
        // premises of the cerium rule sit in the top row, which holds
        // the first three scan positions.
        let ns = neighbors(&[
            Some("HBrO2"),
            Some("BrO3-"),
            Some("H+"),
            Some("BrCH(COOH)2"),
            Some("H2O"),
            Some("Br-"),
            Some("CH2(COOH)2"),
            Some("BrO3-"),
        ]);
        assert_eq!(
            premises_available(&[BromousAcid, Bromate, Hydron], &refs(&ns)),
            Some(vec![(BromousAcid, 0), (Bromate, 1), (Hydron, 2)])
        );
    }

    #[test]
    fn premise_assignment_is_lexicographically_first() {
        use Species::*;
        let ns = neighbors(&[
            Some("HBrO2 (+) BrO3-"),
            Some("BrO3-"),
            Some("H+"),
            Some("HBrO2"),
        ]);
        // Premises in rule order take the smallest usable indices; the
        // first cell cannot serve twice, so bromate falls to cell 1.
        assert_eq!(
            premises_available(&[BromousAcid, Bromate, Hydron], &refs(&ns)),
            Some(vec![(BromousAcid, 0), (Bromate, 1), (Hydron, 2)])
        );
    }

    #[test]
    fn species_step_examples() {
        use Species::*;
        // Bromous acid decays unconditionally.
        let ns = neighbors(&[None]);
        assert_eq!(
            species_step(BromousAcid, &refs(&ns)),
            Some(Cluster::new(vec![HypobromousAcid, Bromate, Hydron]).unwrap())
        );
        // Hydron has no rule.
        assert_eq!(species_step(Hydron, &refs(&ns)), None);
        // Cerium(IV) reduction needs its two premises in distinct cells.
        let ns = neighbors(&[Some("BrCH(COOH)2"), Some("H2O")]);
        assert_eq!(
            species_step(Cerium4, &refs(&ns)),
            Some(Cluster::new(vec![Bromide, Cerium3, FormicAcid, CarbonDioxide, Hydron]).unwrap())
        );
    }

    #[test]
    fn cluster_step_drops_unchanged_siblings() {
        // The center cell one step after ignition: cerium(IV) reduces,
        // bromous acid decays, and the water sibling is dropped.
        let ns = neighbors(&[
            Some("HOBr (+) BrO3- (+) H+"),
            Some("BrO3-"),
            Some("H+"),
            Some("BrCH(COOH)2"),
            Some("H2O"),
            Some("Br-"),
            Some("CH2(COOH)2"),
            Some("BrO3-"),
        ]);
        let cluster = m("Ce4+ (+) HBrO2 (+) H2O").clusters()[0].clone();
        let (products, fired) = cluster_step(&cluster, &refs(&ns));
        assert_eq!(fired, vec![2, 3]);
        assert_eq!(
            Mixture::new(products).unwrap(),
            m("Br- (+) Ce3+ (+) HCOOH (+) CO2 (+) H+, HOBr (+) BrO3- (+) H+")
        );

        // No part reactive: the cluster survives whole.
        let ns = neighbors(&[None]);
        let cluster = m("H+ (+) H2O").clusters()[0].clone();
        let (products, fired) = cluster_step(&cluster, &refs(&ns));
        assert!(fired.is_empty());
        assert_eq!(products, vec![cluster]);

        // One reactive part, the inert hydron dropped.
        let cluster = m("HBrO2 (+) H+").clusters()[0].clone();
        let (products, fired) = cluster_step(&cluster, &refs(&ns));
        assert_eq!(fired, vec![3]);
        assert_eq!(Mixture::new(products).unwrap(), m("HOBr (+) BrO3- (+) H+"));
    }

    #[test]
    fn mixture_step_retains_usable_unchanged_clusters() {
        // The center cell two steps in: the bromide-bearing cluster
        // cannot react (no bromous acid anywhere) but its bromide is a
        // premise of rules hosted by neighbors, so it is retained.
        let ns = neighbors(&[
            Some("HOBr (+) BrO3- (+) H+"),
            Some("BrO3-"),
            Some("H+"),
            Some("BrCH(COOH)2"),
            Some("H2O"),
            Some("Br-"),
            Some("CH2(COOH)2"),
            Some("BrO3-"),
        ]);
        let mix = m("Br- (+) Ce3+ (+) HCOOH (+) CO2 (+) H+, HOBr (+) BrO3- (+) H+");
        let step = mixture_step(&mix, &refs(&ns), true);
        assert_eq!(
            step.mixture,
            m("Br- (+) Ce3+ (+) HCOOH (+) CO2 (+) H+, Br2 (+) H2O, HOBr (+) HBrO2")
        );
        assert_eq!(step.retained, 1);

        // A lone unreactive singleton mixture is a fixed point.
        let ns = neighbors(&[None]);
        let step = mixture_step(&m("H2O"), &refs(&ns), true);
        assert_eq!(step.mixture, m("H2O"));
    }

    #[test]
    fn ignition_and_decay_deltas() {
        // Center of the initial grid: cerium(III) oxidizes using the
        // three premises hosted in the top row.
        let ns = neighbors(&[
            Some("HBrO2"),
            Some("BrO3-"),
            Some("H+"),
            Some("BrCH(COOH)2"),
            Some("H2O"),
            Some("Br-"),
            Some("CH2(COOH)2"),
            Some("BrO3-"),
        ]);
        let d = BzRule::default().delta(&m("Ce3+"), &refs(&ns)).unwrap();
        assert_eq!(d.state, m("Ce4+ (+) HBrO2 (+) H2O"));
        let trace = d.fired.unwrap();
        assert_eq!(trace.binding("reactions"), Some("1"));

        // Top-left corner: bromous acid decays with no premises.
        let ns = neighbors(&[
            None,
            None,
            None,
            None,
            Some("BrO3-"),
            None,
            Some("BrCH(COOH)2"),
            Some("Ce3+"),
        ]);
        let d = BzRule::default().delta(&m("HBrO2"), &refs(&ns)).unwrap();
        assert_eq!(d.state, m("HOBr (+) BrO3- (+) H+"));

        // Bottom-left bromide: premises missing from its neighborhood.
        let ns = neighbors(&[
            None,
            Some("BrCH(COOH)2"),
            Some("Ce3+"),
            None,
            Some("CH2(COOH)2"),
            None,
            None,
            None,
        ]);
        let d = BzRule::default().delta(&m("Br-"), &refs(&ns)).unwrap();
        assert_eq!(d.state, m("Br-"));
        assert!(d.fired.is_none());
    }

    #[test]
    fn species_without_rules_are_quiescent() {
        use Species::*;
        let inert = [
            Hydron,
            Water,
            BromoMalonicAcid,
            FormicAcid,
            CarbonDioxide,
            MalonicAcid,
        ];
        // Surround with everything; they still cannot react.
        let ns = neighbors(&[
            Some("HBrO2, BrO3-, H+, Br-, HOBr, Br2"),
            Some("Ce3+, Ce4+, H2O, BrCH(COOH)2, HCOOH, CO2, CH2(COOH)2"),
        ]);
        for s in inert {
            assert!(reaction_for(s).is_none());
            let d = BzRule::default()
                .delta(&Mixture::singleton(s), &refs(&ns))
                .unwrap();
            assert_eq!(d.state, Mixture::singleton(s));
            assert!(d.fired.is_none());
        }
    }

    #[test]
    fn normalization_is_idempotent_and_canonical() {
        let a = m("HOBr, Br2 (+) H2O, HOBr");
        let once = a.deduplicate();
        assert_eq!(once.deduplicate(), once);
        // Canonical order is stable regardless of input order.
        assert_eq!(
            format_mixture(&m("HOBr, Br2 (+) H2O")),
            format_mixture(&m("Br2 (+) H2O, HOBr"))
        );
    }
}
