//! Running scenarios and reporting.

use super::schema::{
    RulesetConfig, Scenario, ScenarioError, ScenarioStates, SnapshotsDoc, SCHEMA_VERSION,
};
use crate::bz::{parse_mixture, BzRule, Mixture};
use crate::engine::{
    classify_trace, detect_global_cycle, evolve, is_reversible, trace_of, Configuration, CycleInfo,
    Point, Region, Reversibility, ScriptedCells, StepFires, TraceClass, TransitionRule,
};
use crate::logic::{
    format_formula, format_sequent, parse_formula, parse_sequent, EqualityMode, Formula, Sequent,
};
use crate::rules::{Brotherston, ModusPonens, SequentRules, Shoenfield};
use std::collections::BTreeMap;

/// Uniform view of the three state alphabets, so running, dumping and
/// diffing are written once.
pub trait Alphabet: Clone + Eq {
    fn parse_text(text: &str) -> Result<Self, String>;
    fn render(&self) -> String;
    fn mode_eq(mode: EqualityMode, a: &Self, b: &Self) -> bool;
}

impl Alphabet for Formula {
    fn parse_text(text: &str) -> Result<Self, String> {
        parse_formula(text).map_err(|e| e.to_string())
    }
    fn render(&self) -> String {
        format_formula(self)
    }
    fn mode_eq(mode: EqualityMode, a: &Self, b: &Self) -> bool {
        mode.formulas_equal(a, b)
    }
}

impl Alphabet for Sequent {
    fn parse_text(text: &str) -> Result<Self, String> {
        parse_sequent(text).map_err(|e| e.to_string())
    }
    fn render(&self) -> String {
        format_sequent(self)
    }
    fn mode_eq(mode: EqualityMode, a: &Self, b: &Self) -> bool {
        mode.sequents_equal(a, b)
    }
}

impl Alphabet for Mixture {
    fn parse_text(text: &str) -> Result<Self, String> {
        parse_mixture(text).map_err(|e| e.to_string())
    }
    fn render(&self) -> String {
        self.to_string()
    }
    // Mixtures are canonical multisets; scenario validation pins their
    // equality mode to syntactic.
    fn mode_eq(_mode: EqualityMode, a: &Self, b: &Self) -> bool {
        a == b
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub horizon_override: Option<u64>,
    /// Stop stepping at an exact global fixpoint and pad the remaining
    /// snapshots with copies. Only taken when no cells are scripted.
    pub early_stop: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            horizon_override: None,
            early_stop: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Snapshot {
    pub time: u64,
    /// Region points in row-major order with canonical state strings.
    pub cells: Vec<(Point, String)>,
}

#[derive(Debug, Clone)]
pub struct CellReport {
    pub point: Point,
    pub states: Vec<String>,
    pub class: TraceClass,
}

/// Everything one run produces; a pure function of the scenario.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub scenario: String,
    pub ruleset: &'static str,
    pub equality: EqualityMode,
    pub horizon: u64,
    pub region: Region,
    pub snapshots: Vec<Snapshot>,
    pub fires: Vec<StepFires>,
    pub cycle: Option<CycleInfo>,
    pub reversibility: Reversibility,
    pub cells: Vec<CellReport>,
    pub fixpoint_stop: Option<u64>,
}

fn formula_rule(config: &RulesetConfig) -> Box<dyn TransitionRule<Formula>> {
    match config {
        RulesetConfig::Mp => Box::new(ModusPonens),
        RulesetConfig::Shoenfield { expansion } => Box::new(Shoenfield {
            expansion_enabled: *expansion,
        }),
        _ => unreachable!("validated at load"),
    }
}

fn sequent_rule(config: &RulesetConfig) -> Box<dyn TransitionRule<Sequent>> {
    match config {
        RulesetConfig::Sequent(opts) => Box::new(SequentRules::new(opts.clone())),
        RulesetConfig::Brotherston { order } => Box::new(Brotherston::with_order(order.clone())),
        _ => unreachable!("validated at load"),
    }
}

fn mixture_rule(config: &RulesetConfig) -> Box<dyn TransitionRule<Mixture>> {
    match config {
        RulesetConfig::Bz { idempotency } => Box::new(BzRule {
            idempotency: *idempotency,
        }),
        _ => unreachable!("validated at load"),
    }
}

fn run_alphabet<S: Alphabet>(
    scenario: &Scenario,
    cells: &BTreeMap<Point, S>,
    scripted: &ScriptedCells<S>,
    rule: &dyn TransitionRule<S>,
    opts: &RunOptions,
) -> Result<RunReport, ScenarioError> {
    let horizon = opts.horizon_override.unwrap_or(scenario.horizon);
    let initial = Configuration::from_map(0, scenario.region.clone(), cells.clone())?;
    // One probe step past the reported horizon, so a fixpoint reached
    // exactly at the horizon is still provable from the data.
    let evolution = evolve(
        initial,
        rule,
        &scenario.neighborhood,
        scripted,
        horizon + 1,
        opts.early_stop,
    )?;
    let mode = scenario.equality;
    let eq = move |a: &S, b: &S| S::mode_eq(mode, a, b);
    let cycle = detect_global_cycle(&evolution, &eq);
    let reversibility = is_reversible(&evolution, cycle, &eq);

    let mut cell_reports = Vec::new();
    for z in scenario.region.points() {
        let trace = trace_of(&evolution, &z)?;
        let class = classify_trace(&trace, cycle, &eq);
        cell_reports.push(CellReport {
            point: z,
            states: trace.states[..=horizon as usize]
                .iter()
                .map(S::render)
                .collect(),
            class,
        });
    }

    let snapshots = evolution.configs[..=horizon as usize]
        .iter()
        .map(|c| Snapshot {
            time: c.time(),
            cells: c.cells().map(|(p, s)| (p.clone(), s.render())).collect(),
        })
        .collect();

    Ok(RunReport {
        scenario: scenario.name.clone(),
        ruleset: scenario.ruleset.name(),
        equality: mode,
        horizon,
        region: scenario.region.clone(),
        snapshots,
        fires: evolution.fires[..horizon as usize].to_vec(),
        cycle,
        reversibility,
        cells: cell_reports,
        fixpoint_stop: evolution.fixpoint_stop.filter(|s| *s <= horizon),
    })
}

/// Runs a scenario to a deterministic report.
pub fn run_scenario(scenario: &Scenario, opts: &RunOptions) -> Result<RunReport, ScenarioError> {
    match &scenario.states {
        ScenarioStates::Formulas { cells, scripted } => {
            let rule = formula_rule(&scenario.ruleset);
            run_alphabet(scenario, cells, scripted, rule.as_ref(), opts)
        }
        ScenarioStates::Sequents { cells, scripted } => {
            let rule = sequent_rule(&scenario.ruleset);
            run_alphabet(scenario, cells, scripted, rule.as_ref(), opts)
        }
        ScenarioStates::Mixtures { cells, scripted } => {
            let rule = mixture_rule(&scenario.ruleset);
            run_alphabet(scenario, cells, scripted, rule.as_ref(), opts)
        }
    }
}

/// Outcome of comparing a run against a golden snapshot sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiffOutcome {
    Match {
        snapshots_checked: usize,
    },
    Mismatch {
        time: u64,
        cell: Point,
        run: String,
        golden: String,
    },
}

fn point_key(p: &Point) -> String {
    p.coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn diff_alphabet<S: Alphabet>(
    scenario: &Scenario,
    cells: &BTreeMap<Point, S>,
    scripted: &ScriptedCells<S>,
    rule: &dyn TransitionRule<S>,
    golden: &SnapshotsDoc,
    golden_path: &str,
) -> Result<DiffOutcome, ScenarioError> {
    let golden_err = |message: String| ScenarioError::Golden {
        path: golden_path.to_string(),
        message,
    };
    let max_time = golden.snapshot.iter().map(|s| s.time).max().unwrap_or(0);
    let horizon = scenario.horizon.max(max_time);
    let initial = Configuration::from_map(0, scenario.region.clone(), cells.clone())?;
    // Golden comparison never takes the fixpoint shortcut.
    let evolution = evolve(
        initial,
        rule,
        &scenario.neighborhood,
        scripted,
        horizon,
        false,
    )?;
    let mode = scenario.equality;

    for snap in &golden.snapshot {
        if snap.cells.len() != scenario.region.cell_count() {
            return Err(golden_err(format!(
                "snapshot t={} has {} cells but the region has {}",
                snap.time,
                snap.cells.len(),
                scenario.region.cell_count()
            )));
        }
        let config = &evolution.configs[snap.time as usize];
        for z in scenario.region.points() {
            let key = point_key(&z);
            let Some(text) = snap.cells.get(&key) else {
                return Err(golden_err(format!(
                    "snapshot t={} is missing cell {z}",
                    snap.time
                )));
            };
            let golden_state = S::parse_text(text)
                .map_err(|e| golden_err(format!("snapshot t={} cell {z}: {e}", snap.time)))?;
            let run_state = config.get(&z).expect("in region");
            if !S::mode_eq(mode, run_state, &golden_state) {
                return Ok(DiffOutcome::Mismatch {
                    time: snap.time,
                    cell: z,
                    run: run_state.render(),
                    golden: text.clone(),
                });
            }
        }
    }
    Ok(DiffOutcome::Match {
        snapshots_checked: golden.snapshot.len(),
    })
}

/// Compares the scenario's evolution against a golden snapshot
/// sequence, under the scenario's equality mode.
pub fn diff_scenario(
    scenario: &Scenario,
    golden: &SnapshotsDoc,
    golden_path: &str,
) -> Result<DiffOutcome, ScenarioError> {
    match &scenario.states {
        ScenarioStates::Formulas { cells, scripted } => {
            let rule = formula_rule(&scenario.ruleset);
            diff_alphabet(
                scenario,
                cells,
                scripted,
                rule.as_ref(),
                golden,
                golden_path,
            )
        }
        ScenarioStates::Sequents { cells, scripted } => {
            let rule = sequent_rule(&scenario.ruleset);
            diff_alphabet(
                scenario,
                cells,
                scripted,
                rule.as_ref(),
                golden,
                golden_path,
            )
        }
        ScenarioStates::Mixtures { cells, scripted } => {
            let rule = mixture_rule(&scenario.ruleset);
            diff_alphabet(
                scenario,
                cells,
                scripted,
                rule.as_ref(),
                golden,
                golden_path,
            )
        }
    }
}

fn toml_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            other => out.push(other),
        }
    }
    out.push('"');
    out
}

/// Renders snapshots as the structured machine-readable format. The
/// cell table uses the same `"coords" = "state"` shape as a scenario's
/// `[cells]` section, so a dumped time step reloads as an initial state.
pub fn render_structured(snapshots: &[Snapshot]) -> String {
    let mut out = String::new();
    out.push_str(&format!("schema = {SCHEMA_VERSION}\n"));
    for snap in snapshots {
        out.push_str("\n[[snapshot]]\n");
        out.push_str(&format!("time = {}\n", snap.time));
        out.push_str("\n[snapshot.cells]\n");
        for (p, text) in &snap.cells {
            out.push_str(&format!(
                "{} = {}\n",
                toml_quote(&point_key(p)),
                toml_quote(text)
            ));
        }
    }
    out
}

/// Renders one snapshot as a text grid, rows by first coordinate and
/// columns by second, cells joined with " | ". Only defined for one-
/// and two-dimensional regions.
pub fn render_grid(snapshot: &Snapshot, region: &Region) -> Result<String, ScenarioError> {
    if region.dim() > 2 {
        return Err(ScenarioError::Invalid(format!(
            "grid output is only defined for dimension <= 2 (this region has {})",
            region.dim()
        )));
    }
    let states: BTreeMap<&Point, &str> = snapshot
        .cells
        .iter()
        .map(|(p, s)| (p, s.as_str()))
        .collect();
    let mut lines = Vec::new();
    if region.dim() == 1 {
        let row: Vec<&str> = region
            .points()
            .iter()
            .map(|p| states[p])
            .collect::<Vec<_>>();
        lines.push(row.join(" | "));
    } else {
        let (r0, r1) = (region.lower().coords()[0], region.upper().coords()[0]);
        let (c0, c1) = (region.lower().coords()[1], region.upper().coords()[1]);
        for r in r0..=r1 {
            let mut row = Vec::new();
            for c in c0..=c1 {
                let p = Point::new(vec![r, c]);
                row.push(states[&p]);
            }
            lines.push(row.join(" | "));
        }
    }
    Ok(lines.join("\n"))
}
