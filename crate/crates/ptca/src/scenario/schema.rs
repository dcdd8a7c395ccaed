//! Scenario and snapshot file schemas.
//!
//! Scenario files are TOML with a `schema` version key. The same cell
//! map shape (`"coords" = "state text"`) is used by the structured
//! snapshot dump, so a dumped snapshot pastes back into a scenario's
//! `[cells]` section.

use crate::bz::{parse_mixture, Mixture};
use crate::engine::{
    EngineError, GeometryError, Neighborhood, Point, Region, Schedule, ScriptedCells, TimePattern,
};
use crate::logic::{parse_formula, parse_sequent, EqualityMode, Formula, Sequent};
use crate::rules::{
    SequentRuleOptions, BROTHERSTON_ALL_RULES, BROTHERSTON_DEFAULT_ORDER, SEQUENT_RULE_ORDER,
};
use serde::Deserialize;
use std::collections::BTreeMap;
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Toml {
        path: String,
        source: Box<toml::de::Error>,
    },
    #[error("unsupported schema version {0} (this build reads version 1)")]
    Schema(u32),
    #[error("{0}")]
    Invalid(String),
    #[error("cell {cell}: {message}")]
    State { cell: Point, message: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("unknown built-in scenario {0:?} (try `ptca scenarios`)")]
    UnknownBuiltin(String),
    #[error("golden {path}: {message}")]
    Golden { path: String, message: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    schema: u32,
    name: Option<String>,
    dimension: usize,
    region: RegionDoc,
    neighborhood: toml::Value,
    ruleset: String,
    equality: Option<String>,
    horizon: u64,
    #[serde(default)]
    options: OptionsDoc,
    cells: BTreeMap<String, String>,
    #[serde(default)]
    scripted: Vec<ScriptedDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegionDoc {
    lower: Vec<i64>,
    upper: Vec<i64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct OptionsDoc {
    expansion: Option<bool>,
    weakening_pool: Option<Vec<String>>,
    rules: Option<Vec<String>>,
    idempotency: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScriptedDoc {
    cell: String,
    default: String,
    #[serde(default)]
    entries: Vec<EntryDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    at: Option<u64>,
    first: Option<u64>,
    period: Option<u64>,
    state: String,
}

/// Ruleset choice with its per-scenario options.
#[derive(Debug, Clone)]
pub enum RulesetConfig {
    Mp,
    Shoenfield { expansion: bool },
    Sequent(SequentRuleOptions),
    Brotherston { order: Vec<String> },
    Bz { idempotency: bool },
}

impl RulesetConfig {
    pub fn name(&self) -> &'static str {
        match self {
            RulesetConfig::Mp => "mp",
            RulesetConfig::Shoenfield { .. } => "shoenfield",
            RulesetConfig::Sequent(_) => "sequent",
            RulesetConfig::Brotherston { .. } => "brotherston",
            RulesetConfig::Bz { .. } => "bz",
        }
    }
}

/// The per-alphabet payload: initial cells plus scripted schedules.
#[derive(Debug, Clone)]
pub enum ScenarioStates {
    Formulas {
        cells: BTreeMap<Point, Formula>,
        scripted: ScriptedCells<Formula>,
    },
    Sequents {
        cells: BTreeMap<Point, Sequent>,
        scripted: ScriptedCells<Sequent>,
    },
    Mixtures {
        cells: BTreeMap<Point, Mixture>,
        scripted: ScriptedCells<Mixture>,
    },
}

/// A validated scenario: geometry checked, every state parsed.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub region: Region,
    pub neighborhood: Neighborhood,
    pub equality: EqualityMode,
    pub horizon: u64,
    pub ruleset: RulesetConfig,
    pub states: ScenarioStates,
}

fn invalid(msg: impl Into<String>) -> ScenarioError {
    ScenarioError::Invalid(msg.into())
}

fn parse_neighborhood(
    value: &toml::Value,
    dimension: usize,
) -> Result<Neighborhood, ScenarioError> {
    match value {
        toml::Value::String(s) => match s.as_str() {
            "moore" => Ok(crate::engine::moore(dimension)?),
            "vonneumann" => Ok(crate::engine::von_neumann(dimension)?),
            other => Err(invalid(format!(
                "neighborhood {other:?} is not \"moore\", \"vonneumann\" or an offset list"
            ))),
        },
        toml::Value::Array(entries) => {
            let mut offsets = Vec::new();
            for e in entries {
                let toml::Value::Array(coords) = e else {
                    return Err(invalid("neighborhood offsets must be integer arrays"));
                };
                let coords: Result<Vec<i64>, _> =
                    coords.iter().map(|c| c.as_integer().ok_or(())).collect();
                let coords =
                    coords.map_err(|_| invalid("neighborhood offsets must be integer arrays"))?;
                if coords.len() != dimension {
                    return Err(invalid(format!(
                        "neighborhood offset {coords:?} does not have dimension {dimension}"
                    )));
                }
                offsets.push(Point::new(coords));
            }
            Ok(Neighborhood::explicit(offsets)?)
        }
        _ => Err(invalid(
            "neighborhood must be \"moore\", \"vonneumann\" or an offset list",
        )),
    }
}

fn parse_point(key: &str, region: &Region) -> Result<Point, ScenarioError> {
    let p = Point::parse(key)?;
    if p.dim() != region.dim() {
        return Err(invalid(format!(
            "cell key {key:?} does not have dimension {}",
            region.dim()
        )));
    }
    if !region.contains(&p) {
        return Err(invalid(format!("cell {p} lies outside the region")));
    }
    Ok(p)
}

fn build_ruleset(doc: &ScenarioDoc) -> Result<RulesetConfig, ScenarioError> {
    let opts = &doc.options;
    let reject_option = |name: &str, present: bool| {
        if present {
            Err(invalid(format!(
                "option {name:?} does not apply to ruleset {:?}",
                doc.ruleset
            )))
        } else {
            Ok(())
        }
    };
    match doc.ruleset.as_str() {
        "mp" => {
            reject_option("expansion", opts.expansion.is_some())?;
            reject_option("weakening_pool", opts.weakening_pool.is_some())?;
            reject_option("rules", opts.rules.is_some())?;
            reject_option("idempotency", opts.idempotency.is_some())?;
            Ok(RulesetConfig::Mp)
        }
        "shoenfield" => {
            reject_option("weakening_pool", opts.weakening_pool.is_some())?;
            reject_option("rules", opts.rules.is_some())?;
            reject_option("idempotency", opts.idempotency.is_some())?;
            Ok(RulesetConfig::Shoenfield {
                expansion: opts.expansion.unwrap_or(false),
            })
        }
        "sequent" => {
            reject_option("expansion", opts.expansion.is_some())?;
            reject_option("idempotency", opts.idempotency.is_some())?;
            let mut sequent_opts = SequentRuleOptions::default();
            if let Some(pool) = &opts.weakening_pool {
                sequent_opts.weakening_pool = pool
                    .iter()
                    .map(|t| {
                        parse_formula(t)
                            .map_err(|e| invalid(format!("weakening_pool entry {t:?}: {e}")))
                    })
                    .collect::<Result<_, _>>()?;
            }
            if let Some(rules) = &opts.rules {
                for r in rules {
                    if !SEQUENT_RULE_ORDER.contains(&r.as_str()) {
                        return Err(invalid(format!("unknown sequent rule {r:?}")));
                    }
                }
                sequent_opts.enabled = rules.iter().cloned().collect();
            }
            Ok(RulesetConfig::Sequent(sequent_opts))
        }
        "brotherston" => {
            reject_option("expansion", opts.expansion.is_some())?;
            reject_option("weakening_pool", opts.weakening_pool.is_some())?;
            reject_option("idempotency", opts.idempotency.is_some())?;
            let order = match &opts.rules {
                Some(rules) => {
                    for r in rules {
                        if !BROTHERSTON_ALL_RULES.contains(&r.as_str()) {
                            return Err(invalid(format!("unknown rule {r:?}")));
                        }
                    }
                    rules.clone()
                }
                None => BROTHERSTON_DEFAULT_ORDER
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            };
            Ok(RulesetConfig::Brotherston { order })
        }
        "bz" => {
            reject_option("expansion", opts.expansion.is_some())?;
            reject_option("weakening_pool", opts.weakening_pool.is_some())?;
            reject_option("rules", opts.rules.is_some())?;
            Ok(RulesetConfig::Bz {
                idempotency: opts.idempotency.unwrap_or(true),
            })
        }
        other => Err(invalid(format!(
            "unknown ruleset {other:?} (expected mp, shoenfield, sequent, brotherston or bz)"
        ))),
    }
}

/// Parses states for one alphabet, filling scripted cells' missing
/// initial states from their schedule at time zero.
fn build_states<S: Clone>(
    doc: &ScenarioDoc,
    region: &Region,
    parse: impl Fn(&str) -> Result<S, String>,
) -> Result<(BTreeMap<Point, S>, ScriptedCells<S>), ScenarioError> {
    let parse_at = |cell: &Point, text: &str| {
        parse(text).map_err(|message| ScenarioError::State {
            cell: cell.clone(),
            message,
        })
    };

    let mut scripted = ScriptedCells::none();
    for sd in &doc.scripted {
        let point = parse_point(&sd.cell, region)?;
        let default = parse_at(&point, &sd.default)?;
        let mut entries = Vec::new();
        for e in &sd.entries {
            let pattern = match (e.at, e.first, e.period) {
                (Some(at), None, None) => TimePattern::At(at),
                (None, Some(first), Some(period)) if period > 0 => {
                    TimePattern::Every { first, period }
                }
                _ => {
                    return Err(invalid(format!(
                        "scripted entry for cell {point} needs either `at` or `first` + nonzero `period`"
                    )))
                }
            };
            entries.push((pattern, parse_at(&point, &e.state)?));
        }
        scripted.insert(point, Schedule { default, entries });
    }

    let mut cells = BTreeMap::new();
    for (key, text) in &doc.cells {
        let point = parse_point(key, region)?;
        let state = parse_at(&point, text)?;
        cells.insert(point, state);
    }
    for p in region.points() {
        if !cells.contains_key(&p) {
            match scripted.get(&p) {
                Some(schedule) => {
                    cells.insert(p.clone(), schedule.state_at(0).clone());
                }
                None => {
                    return Err(invalid(format!("cell {p} has no initial state")));
                }
            }
        }
    }
    Ok((cells, scripted))
}

pub fn parse_scenario_text(text: &str, origin: &str) -> Result<Scenario, ScenarioError> {
    let doc: ScenarioDoc = toml::from_str(text).map_err(|source| ScenarioError::Toml {
        path: origin.to_string(),
        source: Box::new(source),
    })?;
    if doc.schema != SCHEMA_VERSION {
        return Err(ScenarioError::Schema(doc.schema));
    }
    if doc.dimension == 0 {
        return Err(invalid("dimension must be at least 1"));
    }
    if doc.region.lower.len() != doc.dimension || doc.region.upper.len() != doc.dimension {
        return Err(invalid("region bounds must match the dimension"));
    }
    let region = Region::new(
        Point::new(doc.region.lower.clone()),
        Point::new(doc.region.upper.clone()),
    )?;
    let neighborhood = parse_neighborhood(&doc.neighborhood, doc.dimension)?;
    let equality = match doc.equality.as_deref() {
        None => EqualityMode::Syntactic,
        Some(name) => EqualityMode::from_name(name)
            .ok_or_else(|| invalid(format!("unknown equality mode {name:?}")))?,
    };
    let ruleset = build_ruleset(&doc)?;
    if matches!(ruleset, RulesetConfig::Bz { .. }) && equality != EqualityMode::Syntactic {
        return Err(invalid("mixture states only support syntactic equality"));
    }

    let states = match &ruleset {
        RulesetConfig::Mp | RulesetConfig::Shoenfield { .. } => {
            let (cells, scripted) = build_states(&doc, &region, |t| {
                parse_formula(t).map_err(|e| e.to_string())
            })?;
            ScenarioStates::Formulas { cells, scripted }
        }
        RulesetConfig::Sequent(_) | RulesetConfig::Brotherston { .. } => {
            let (cells, scripted) = build_states(&doc, &region, |t| {
                parse_sequent(t).map_err(|e| e.to_string())
            })?;
            ScenarioStates::Sequents { cells, scripted }
        }
        RulesetConfig::Bz { .. } => {
            let (cells, scripted) = build_states(&doc, &region, |t| {
                parse_mixture(t).map_err(|e| e.to_string())
            })?;
            ScenarioStates::Mixtures { cells, scripted }
        }
    };

    Ok(Scenario {
        name: doc.name.unwrap_or_else(|| origin.to_string()),
        region,
        neighborhood,
        equality,
        horizon: doc.horizon,
        ruleset,
        states,
    })
}

/// Snapshot sequence document: the structured dump format and the
/// golden-file format are the same thing.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SnapshotsDoc {
    pub schema: u32,
    #[serde(default)]
    pub snapshot: Vec<SnapshotDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SnapshotDoc {
    pub time: u64,
    pub cells: BTreeMap<String, String>,
}

pub fn parse_snapshots_text(text: &str, origin: &str) -> Result<SnapshotsDoc, ScenarioError> {
    let doc: SnapshotsDoc = toml::from_str(text).map_err(|source| ScenarioError::Toml {
        path: origin.to_string(),
        source: Box::new(source),
    })?;
    if doc.schema != SCHEMA_VERSION {
        return Err(ScenarioError::Schema(doc.schema));
    }
    Ok(doc)
}
