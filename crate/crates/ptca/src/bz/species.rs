//! The closed 13-species alphabet of the simplified oscillating
//! bromate-cerium-malonic-acid reaction.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MixtureParseError {
    #[error("unknown species {0:?}")]
    UnknownSpecies(String),
    #[error("empty cluster in mixture text")]
    EmptyCluster,
    #[error("a mixture needs at least one cluster")]
    EmptyMixture,
}

/// One reactant species. The discriminant order fixes the canonical
/// ordering used everywhere clusters are sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Species {
    Cerium3,
    BromousAcid,
    Bromate,
    Hydron,
    Cerium4,
    Water,
    BromoMalonicAcid,
    Bromide,
    FormicAcid,
    CarbonDioxide,
    HypobromousAcid,
    Bromine,
    MalonicAcid,
}

pub const ALL_SPECIES: [Species; 13] = [
    Species::Cerium3,
    Species::BromousAcid,
    Species::Bromate,
    Species::Hydron,
    Species::Cerium4,
    Species::Water,
    Species::BromoMalonicAcid,
    Species::Bromide,
    Species::FormicAcid,
    Species::CarbonDioxide,
    Species::HypobromousAcid,
    Species::Bromine,
    Species::MalonicAcid,
];

impl Species {
    pub fn symbol(self) -> &'static str {
        match self {
            Species::Cerium3 => "Ce3+",
            Species::BromousAcid => "HBrO2",
            Species::Bromate => "BrO3-",
            Species::Hydron => "H+",
            Species::Cerium4 => "Ce4+",
            Species::Water => "H2O",
            Species::BromoMalonicAcid => "BrCH(COOH)2",
            Species::Bromide => "Br-",
            Species::FormicAcid => "HCOOH",
            Species::CarbonDioxide => "CO2",
            Species::HypobromousAcid => "HOBr",
            Species::Bromine => "Br2",
            Species::MalonicAcid => "CH2(COOH)2",
        }
    }

    pub fn from_symbol(text: &str) -> Result<Species, MixtureParseError> {
        ALL_SPECIES
            .into_iter()
            .find(|s| s.symbol() == text)
            .ok_or_else(|| MixtureParseError::UnknownSpecies(text.to_string()))
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
