//! Configurations, transition rules and scripted cells.

use super::geometry::{Neighborhood, Point, Region};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("cell {0} lies outside the region")]
    OutOfRegion(Point),
    #[error("configuration is missing a state for cell {0}")]
    MissingCell(Point),
    #[error("transition rule failed at cell {point}: {message}")]
    RuleFailure { point: Point, message: String },
    #[error("scripted cell {0} lies outside the region")]
    ScriptedOutOfRegion(Point),
}

/// A time-stamped assignment of one state to every cell of a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration<S> {
    time: u64,
    region: Region,
    cells: BTreeMap<Point, S>,
}

impl<S> Configuration<S> {
    /// Builds a configuration from an explicit map, which must assign a
    /// state to exactly the points of the region.
    pub fn from_map(
        time: u64,
        region: Region,
        cells: BTreeMap<Point, S>,
    ) -> Result<Configuration<S>, EngineError> {
        for p in cells.keys() {
            if !region.contains(p) {
                return Err(EngineError::OutOfRegion(p.clone()));
            }
        }
        for p in region.points() {
            if !cells.contains_key(&p) {
                return Err(EngineError::MissingCell(p));
            }
        }
        Ok(Configuration {
            time,
            region,
            cells,
        })
    }

    pub fn fill(
        time: u64,
        region: Region,
        mut state_of: impl FnMut(&Point) -> S,
    ) -> Configuration<S> {
        let cells = region.points().into_iter().map(|p| {
            let s = state_of(&p);
            (p, s)
        });
        Configuration {
            time,
            region,
            cells: cells.collect(),
        }
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn get(&self, p: &Point) -> Option<&S> {
        self.cells.get(p)
    }

    pub fn cells(&self) -> impl Iterator<Item = (&Point, &S)> {
        self.cells.iter()
    }

    /// Pointwise state comparison under a caller-chosen equality. The
    /// timestamp deliberately does not participate.
    pub fn states_equal_by(&self, other: &Configuration<S>, eq: &dyn Fn(&S, &S) -> bool) -> bool {
        self.region == other.region
            && self
                .cells
                .iter()
                .zip(other.cells.iter())
                .all(|((pa, sa), (pb, sb))| pa == pb && eq(sa, sb))
    }
}

/// Record of which rule case fired at a cell during one step. Deltas
/// return it only when the state actually changed, and the bindings are
/// enough to re-derive the output from the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleTrace {
    pub rule: String,
    pub bindings: Vec<(String, String)>,
    pub neighbor_used: Option<usize>,
}

impl RuleTrace {
    pub fn new(rule: impl Into<String>) -> RuleTrace {
        RuleTrace {
            rule: rule.into(),
            bindings: Vec::new(),
            neighbor_used: None,
        }
    }

    pub fn bind(mut self, name: &str, value: impl Into<String>) -> RuleTrace {
        self.bindings.push((name.to_string(), value.into()));
        self
    }

    pub fn via_neighbor(mut self, index: usize) -> RuleTrace {
        self.neighbor_used = Some(index);
        self
    }

    pub fn binding(&self, name: &str) -> Option<&str> {
        self.bindings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }
}

/// Outcome of one local transition.
#[derive(Clone, Debug)]
pub struct Delta<S> {
    pub state: S,
    pub fired: Option<RuleTrace>,
}

impl<S> Delta<S> {
    pub fn unchanged(state: S) -> Delta<S> {
        Delta { state, fired: None }
    }

    pub fn fired(state: S, trace: RuleTrace) -> Delta<S> {
        Delta {
            state,
            fired: Some(trace),
        }
    }
}

/// The local transition function. Argument `neighbors[i]` carries the
/// state at `z + offsets[i]`, or `None` when that point falls outside
/// the region; absent neighbors never satisfy any neighbor condition.
///
/// Implementations must be total and deterministic, and may be invoked
/// concurrently: per-cell evaluations within a step are independent.
pub trait TransitionRule<S> {
    fn delta(&self, own: &S, neighbors: &[Option<&S>]) -> Result<Delta<S>, String>;

    /// Stable identifier used in reports.
    fn name(&self) -> &'static str;
}

/// One entry of a scripted-cell schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TimePattern {
    /// Matches exactly one instant.
    At(u64),
    /// Matches `first`, `first + period`, `first + 2*period`, ...
    Every { first: u64, period: u64 },
}

impl TimePattern {
    pub fn matches(&self, t: u64) -> bool {
        match *self {
            TimePattern::At(at) => t == at,
            TimePattern::Every { first, period } => {
                t >= first && (t - first).is_multiple_of(period)
            }
        }
    }

    fn threshold(&self) -> u64 {
        match *self {
            TimePattern::At(at) => at,
            TimePattern::Every { first, .. } => first,
        }
    }
}

/// A total function from time to state, given as pattern entries over a
/// default. The first matching entry wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule<S> {
    pub default: S,
    pub entries: Vec<(TimePattern, S)>,
}

impl<S> Schedule<S> {
    pub fn constant(state: S) -> Schedule<S> {
        Schedule {
            default: state,
            entries: Vec::new(),
        }
    }

    pub fn state_at(&self, t: u64) -> &S {
        self.entries
            .iter()
            .find(|(pat, _)| pat.matches(t))
            .map(|(_, s)| s)
            .unwrap_or(&self.default)
    }

    /// Decides whether the schedule provably satisfies
    /// `state_at(t) = state_at(t + period)` for every `t >= start`.
    ///
    /// Every periodic entry must have a period dividing the candidate;
    /// then match statuses are eventually periodic, and checking one
    /// window past the last entry threshold covers all remaining t.
    pub fn has_period_by(&self, eq: &dyn Fn(&S, &S) -> bool, period: u64, start: u64) -> bool {
        if period == 0 {
            return false;
        }
        for (pat, _) in &self.entries {
            if let TimePattern::Every { period: p, .. } = pat {
                if *p == 0 || !period.is_multiple_of(*p) {
                    return false;
                }
            }
        }
        let threshold = self
            .entries
            .iter()
            .map(|(pat, _)| pat.threshold())
            .max()
            .unwrap_or(0)
            .max(start);
        (start..=threshold + period).all(|t| eq(self.state_at(t), self.state_at(t + period)))
    }

    /// True when no entry can match at or after `t`, so the schedule is
    /// the constant default from `t` on.
    pub fn constant_from(&self, t: u64) -> bool {
        self.entries.iter().all(|(pat, _)| match pat {
            TimePattern::At(at) => *at < t,
            TimePattern::Every { .. } => false,
        })
    }
}

/// The scripted cells of a scenario: points whose state is a function of
/// time, bypassing the transition rule entirely.
#[derive(Clone, Debug, Default)]
pub struct ScriptedCells<S> {
    schedules: BTreeMap<Point, Schedule<S>>,
}

impl<S> ScriptedCells<S> {
    pub fn none() -> ScriptedCells<S> {
        ScriptedCells {
            schedules: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, point: Point, schedule: Schedule<S>) {
        self.schedules.insert(point, schedule);
    }

    pub fn get(&self, point: &Point) -> Option<&Schedule<S>> {
        self.schedules.get(point)
    }

    pub fn is_empty(&self) -> bool {
        self.schedules.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Schedule<S>)> {
        self.schedules.iter()
    }

    pub fn validate(&self, region: &Region) -> Result<(), EngineError> {
        for p in self.schedules.keys() {
            if !region.contains(p) {
                return Err(EngineError::ScriptedOutOfRegion(p.clone()));
            }
        }
        Ok(())
    }
}

/// Snapshot of the neighbor states a cell reads, in neighborhood order.
pub fn neighbor_snapshot<'c, S>(
    config: &'c Configuration<S>,
    nbhd: &Neighborhood,
    z: &Point,
) -> Vec<Option<&'c S>> {
    nbhd.offsets()
        .iter()
        .map(|offset| config.get(&z.add(offset)))
        .collect()
}
