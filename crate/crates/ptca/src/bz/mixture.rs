//! Clusters and mixtures.
//!
//! A cluster is a nonempty flat sequence of species joined by the
//! coupling operation (rendered `(+)`); coupling is treated as
//! associative, so no internal grouping exists, and part order is
//! preserved as produced. A mixture is a multiset of clusters: storage
//! keeps the clusters canonically sorted, so the derived equality is
//! multiset equality and rendering is stable across runs.

use super::species::{MixtureParseError, Species};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cluster {
    parts: Vec<Species>,
}

impl Cluster {
    pub fn new(parts: Vec<Species>) -> Result<Cluster, MixtureParseError> {
        if parts.is_empty() {
            return Err(MixtureParseError::EmptyCluster);
        }
        Ok(Cluster { parts })
    }

    pub fn singleton(s: Species) -> Cluster {
        Cluster { parts: vec![s] }
    }

    pub fn parts(&self) -> &[Species] {
        &self.parts
    }

    pub fn contains(&self, s: Species) -> bool {
        self.parts.contains(&s)
    }
}

impl fmt::Display for Cluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" (+) ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mixture {
    clusters: Vec<Cluster>,
}

impl Mixture {
    /// Builds a mixture, sorting the clusters into canonical order.
    /// Duplicates are kept; idempotent collapse is a step-policy choice
    /// applied by the transition pipeline, not by construction.
    pub fn new(mut clusters: Vec<Cluster>) -> Result<Mixture, MixtureParseError> {
        if clusters.is_empty() {
            return Err(MixtureParseError::EmptyMixture);
        }
        clusters.sort();
        Ok(Mixture { clusters })
    }

    pub fn singleton(s: Species) -> Mixture {
        Mixture {
            clusters: vec![Cluster::singleton(s)],
        }
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn contains_species(&self, s: Species) -> bool {
        self.clusters.iter().any(|c| c.contains(s))
    }

    pub fn species(&self) -> impl Iterator<Item = Species> + '_ {
        self.clusters.iter().flat_map(|c| c.parts().iter().copied())
    }

    /// Collapses duplicate clusters.
    pub fn deduplicate(&self) -> Mixture {
        let mut clusters: Vec<Cluster> = Vec::new();
        for c in &self.clusters {
            if !clusters.contains(c) {
                clusters.push(c.clone());
            }
        }
        Mixture { clusters }
    }
}

impl fmt::Display for Mixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clusters.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses the concrete mixture syntax: clusters separated by commas,
/// species inside a cluster joined by `(+)`. Species names come from
/// the closed alphabet; anything else is rejected.
pub fn parse_mixture(text: &str) -> Result<Mixture, MixtureParseError> {
    let mut clusters = Vec::new();
    for cluster_text in text.split(',') {
        let cluster_text = cluster_text.trim();
        if cluster_text.is_empty() {
            return Err(MixtureParseError::EmptyCluster);
        }
        let mut parts = Vec::new();
        for part in cluster_text.split("(+)") {
            let part = part.trim();
            if part.is_empty() {
                return Err(MixtureParseError::EmptyCluster);
            }
            parts.push(Species::from_symbol(part)?);
        }
        clusters.push(Cluster::new(parts)?);
    }
    Mixture::new(clusters)
}

pub fn format_mixture(m: &Mixture) -> String {
    m.to_string()
}
