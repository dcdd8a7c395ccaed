//! Scenario files, built-in scenarios, runs, reports and golden
//! comparison.

mod run;
mod schema;

pub use run::{
    diff_scenario, render_grid, render_structured, run_scenario, Alphabet, CellReport, DiffOutcome,
    RunOptions, RunReport, Snapshot,
};
pub use schema::{
    parse_scenario_text, parse_snapshots_text, RulesetConfig, Scenario, ScenarioError,
    ScenarioStates, SnapshotDoc, SnapshotsDoc, SCHEMA_VERSION,
};

/// Built-in scenario names with one-line descriptions, in listing order.
pub const BUILTIN_SCENARIOS: [(&str, &str); 5] = [
    (
        "fig1",
        "5x5 modus-ponens grid that freezes after three steps",
    ),
    (
        "shoenfield-demo",
        "contraction, associativity and cut on a one-dimensional row",
    ),
    (
        "sequent-demo",
        "conjunction-right built from a matching neighbor premise",
    ),
    (
        "brotherston-example4",
        "driven cell cycling through inductive-predicate sequents with period 10",
    ),
    (
        "bz-fig5",
        "3x3 oscillating-reaction grid (cerium ignition and recovery)",
    ),
];

/// Source text of a built-in scenario.
pub fn builtin_text(name: &str) -> Option<&'static str> {
    match name {
        "fig1" => Some(include_str!("builtin/fig1.toml")),
        "shoenfield-demo" => Some(include_str!("builtin/shoenfield-demo.toml")),
        "sequent-demo" => Some(include_str!("builtin/sequent-demo.toml")),
        "brotherston-example4" => Some(include_str!("builtin/brotherston-example4.toml")),
        "bz-fig5" => Some(include_str!("builtin/bz-fig5.toml")),
        _ => None,
    }
}

pub fn load_builtin(name: &str) -> Result<Scenario, ScenarioError> {
    let text = builtin_text(name).ok_or_else(|| ScenarioError::UnknownBuiltin(name.to_string()))?;
    parse_scenario_text(text, name)
}

pub fn load_scenario_file(path: &str) -> Result<Scenario, ScenarioError> {
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.to_string(),
        source,
    })?;
    parse_scenario_text(&text, path)
}

/// Loads a scenario by built-in name, falling back to a file path.
pub fn load_scenario(name_or_path: &str) -> Result<Scenario, ScenarioError> {
    if builtin_text(name_or_path).is_some() {
        load_builtin(name_or_path)
    } else {
        load_scenario_file(name_or_path)
    }
}

pub fn load_snapshots_file(path: &str) -> Result<SnapshotsDoc, ScenarioError> {
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.to_string(),
        source,
    })?;
    parse_snapshots_text(&text, path)
}
