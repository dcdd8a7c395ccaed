//! Synchronous evolution.

use super::config::{
    neighbor_snapshot, Configuration, EngineError, RuleTrace, ScriptedCells, TransitionRule,
};
use super::geometry::{Neighborhood, Point};

/// The rule firings of one step, by cell.
pub type StepFires = Vec<(Point, RuleTrace)>;

/// Applies one synchronous step: every non-scripted cell is rewritten by
/// the rule from an immutable snapshot of the current configuration, and
/// scripted cells take their scheduled state at the new time. Returns
/// the successor configuration plus the rule firings that produced it.
pub fn step_traced<S: Clone + Eq>(
    config: &Configuration<S>,
    rule: &dyn TransitionRule<S>,
    nbhd: &Neighborhood,
    scripted: &ScriptedCells<S>,
) -> Result<(Configuration<S>, StepFires), EngineError> {
    scripted.validate(config.region())?;
    let next_time = config.time() + 1;
    let mut cells = std::collections::BTreeMap::new();
    let mut fires = Vec::new();
    for z in config.region().points() {
        if let Some(schedule) = scripted.get(&z) {
            cells.insert(z, schedule.state_at(next_time).clone());
            continue;
        }
        let own = config.get(&z).expect("point inside region");
        let neighbors = neighbor_snapshot(config, nbhd, &z);
        let delta = rule
            .delta(own, &neighbors)
            .map_err(|message| EngineError::RuleFailure {
                point: z.clone(),
                message,
            })?;
        if let Some(trace) = delta.fired {
            fires.push((z.clone(), trace));
        }
        cells.insert(z, delta.state);
    }
    let next = Configuration::from_map(next_time, config.region().clone(), cells)?;
    Ok((next, fires))
}

/// One synchronous step, discarding the firing records.
pub fn step<S: Clone + Eq>(
    config: &Configuration<S>,
    rule: &dyn TransitionRule<S>,
    nbhd: &Neighborhood,
    scripted: &ScriptedCells<S>,
) -> Result<Configuration<S>, EngineError> {
    step_traced(config, rule, nbhd, scripted).map(|(c, _)| c)
}

/// A computed evolution: the configurations at times `0..=horizon`, the
/// rule firings of each step, and the schedules that drove it (kept for
/// cycle proofs).
#[derive(Clone, Debug)]
pub struct Evolution<S> {
    pub configs: Vec<Configuration<S>>,
    pub fires: Vec<StepFires>,
    pub scripted: ScriptedCells<S>,
    /// Set when stepping stopped early at an exact global fixpoint; the
    /// remaining configurations are padded copies.
    pub fixpoint_stop: Option<u64>,
}

impl<S> Evolution<S> {
    pub fn horizon(&self) -> u64 {
        (self.configs.len() - 1) as u64
    }
}

/// Runs the evolution for `horizon` steps. With `early_stop`, stepping
/// halts once a configuration exactly equals its successor and the tail
/// is padded with copies; this shortcut is only taken when there are no
/// scripted cells, whose schedules could still change later states.
pub fn evolve<S: Clone + Eq>(
    initial: Configuration<S>,
    rule: &dyn TransitionRule<S>,
    nbhd: &Neighborhood,
    scripted: &ScriptedCells<S>,
    horizon: u64,
    early_stop: bool,
) -> Result<Evolution<S>, EngineError> {
    let mut configs = Vec::with_capacity(horizon as usize + 1);
    let mut fires = Vec::with_capacity(horizon as usize);
    configs.push(initial);
    let mut fixpoint_stop = None;
    for t in 0..horizon {
        let (next, step_fires) = step_traced(configs.last().unwrap(), rule, nbhd, scripted)?;
        let stuck = next.states_equal_by(configs.last().unwrap(), &|a, b| a == b);
        fires.push(step_fires);
        configs.push(next);
        if early_stop && stuck && scripted.is_empty() {
            fixpoint_stop = Some(t + 1);
            break;
        }
    }
    if fixpoint_stop.is_some() {
        // Pad the remaining times with copies of the fixed configuration.
        let last = configs.last().unwrap().clone();
        while (configs.len() as u64) <= horizon {
            let t = configs.len() as u64;
            configs.push(Configuration::fill(t, last.region().clone(), |p| {
                last.get(p).unwrap().clone()
            }));
            fires.push(Vec::new());
        }
    }
    Ok(Evolution {
        configs,
        fires,
        scripted: scripted.clone(),
        fixpoint_stop,
    })
}
