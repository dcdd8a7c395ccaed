//! Derivation-trace extraction, global cycle detection, trace
//! classification and reversibility verdicts.
//!
//! Every claim made here is backed by evidence inside the computed
//! horizon. A cell is never classified cyclic or eventually constant
//! from a finite prefix alone: the classifier first needs a proven
//! global recurrence, from which the behavior beyond the horizon
//! follows by determinism of the step function.

use super::config::EngineError;
use super::evolve::Evolution;
use super::geometry::Point;

/// One cell's state sequence over the computed horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace<S> {
    pub point: Point,
    pub states: Vec<S>,
}

pub fn trace_of<S: Clone>(evolution: &Evolution<S>, z: &Point) -> Result<Trace<S>, EngineError> {
    if !evolution.configs[0].region().contains(z) {
        return Err(EngineError::OutOfRegion(z.clone()));
    }
    Ok(Trace {
        point: z.clone(),
        states: evolution
            .configs
            .iter()
            .map(|c| c.get(z).expect("in region").clone())
            .collect(),
    })
}

/// A proven recurrence of the global configuration: the configuration at
/// `start + k` equals the one at `start + period + k` for every observed
/// k, and the scripted schedules are compatible, so the recurrence
/// continues forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleInfo {
    pub start: u64,
    pub period: u64,
}

/// Finds the lexicographically smallest `(start, period)` such that the
/// configurations at `start` and `start + period` are equal under `eq`.
/// A candidate only counts when the recurrence re-verifies across the
/// whole observed window and every scripted schedule provably repeats
/// with the same period, which makes the recurrence permanent.
pub fn detect_global_cycle<S: Clone + Eq>(
    evolution: &Evolution<S>,
    eq: &dyn Fn(&S, &S) -> bool,
) -> Option<CycleInfo> {
    let n = evolution.configs.len();
    for start in 0..n {
        for period in 1..n - start {
            let config_eq = |a: usize, b: usize| {
                evolution.configs[a].states_equal_by(&evolution.configs[b], eq)
            };
            if !config_eq(start, start + period) {
                continue;
            }
            let window_ok = (start..n - period).all(|k| config_eq(k, k + period));
            if !window_ok {
                continue;
            }
            let schedules_ok = evolution
                .scripted
                .iter()
                .all(|(_, sch)| sch.has_period_by(eq, period as u64, start as u64));
            if !schedules_ok {
                continue;
            }
            return Some(CycleInfo {
                start: start as u64,
                period: period as u64,
            });
        }
    }
    None
}

/// Classification of one derivation trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceClass {
    /// The cell provably keeps one state forever from `settle` on.
    /// `also_cyclic` carries the period when the trace additionally
    /// satisfies the circularity condition from time zero (the two
    /// notions overlap for constant traces).
    EventuallyConstant {
        settle: u64,
        also_cyclic: Option<u64>,
    },
    /// The trace provably satisfies `states[t] = states[t + period]` for
    /// every t, with the minimal such period.
    Cyclic { period: u64 },
    /// No claim can be made within the horizon.
    Unknown,
}

fn divisors(p: u64) -> Vec<u64> {
    (1..=p).filter(|d| p.is_multiple_of(*d)).collect()
}

/// Smallest divisor of `period` that the tail of the trace (from
/// `start`) observably repeats with. The global recurrence guarantees
/// the tail repeats with `period`, so its minimal period divides it.
fn minimal_tail_period<S>(
    states: &[S],
    start: usize,
    period: usize,
    eq: &dyn Fn(&S, &S) -> bool,
) -> usize {
    for d in divisors(period as u64) {
        let d = d as usize;
        if (start..states.len() - d).all(|t| eq(&states[t], &states[t + d])) {
            return d;
        }
    }
    period
}

/// Classifies a trace against the recurrence proven for its evolution.
pub fn classify_trace<S>(
    trace: &Trace<S>,
    cycle: Option<CycleInfo>,
    eq: &dyn Fn(&S, &S) -> bool,
) -> TraceClass {
    let Some(cycle) = cycle else {
        return TraceClass::Unknown;
    };
    let states = &trace.states;
    let n = states.len();
    let start = cycle.start as usize;
    let period = cycle.period as usize;

    // Circularity from time zero, with the minimal divisor of the
    // proven global period.
    let cyclic_from_zero = divisors(cycle.period).into_iter().find(|&d| {
        let d = d as usize;
        (0..n - d).all(|t| eq(&states[t], &states[t + d]))
    });

    let m = minimal_tail_period(states, start, period, eq);
    if m == 1 {
        // The tail is constant forever; find the earliest settle time.
        let settle = (0..=start)
            .find(|&s| (s..n).all(|t| eq(&states[t], &states[s])))
            .unwrap_or(start) as u64;
        return TraceClass::EventuallyConstant {
            settle,
            also_cyclic: cyclic_from_zero,
        };
    }
    // A periodic tail with a diverging pre-period is eventually
    // periodic but not circular; the classification has no name for
    // that, so it stays Unknown rather than overclaiming.
    match cyclic_from_zero {
        Some(period) => TraceClass::Cyclic { period },
        None => TraceClass::Unknown,
    }
}

/// Reversibility verdict for a whole evolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reversibility {
    /// A global recurrence from time zero was proven, so every
    /// derivation trace is circular.
    Reversible,
    /// The named cell provably violates circularity: its pre-period
    /// states differ from the periodic continuation of its tail.
    NotReversibleWitness(Point),
    /// Neither proof was reachable within the horizon.
    UnknownWithinHorizon,
}

pub fn is_reversible<S: Clone>(
    evolution: &Evolution<S>,
    cycle: Option<CycleInfo>,
    eq: &dyn Fn(&S, &S) -> bool,
) -> Reversibility {
    let Some(cycle) = cycle else {
        return Reversibility::UnknownWithinHorizon;
    };
    if cycle.start == 0 {
        return Reversibility::Reversible;
    }
    let start = cycle.start as usize;
    let period = cycle.period as usize;
    for z in evolution.configs[0].region().points() {
        let states: Vec<&S> = evolution
            .configs
            .iter()
            .map(|c| c.get(&z).expect("in region"))
            .collect();
        let m = minimal_tail_period(&states, start, period, &|a, b| eq(a, b)) as i64;
        // A trace is circular iff every pre-period state equals the
        // value its phase takes in the forever-repeating tail.
        let violates = (0..start).any(|t| {
            let phase = (t as i64 - start as i64).rem_euclid(m) as usize;
            !eq(states[t], states[start + phase])
        });
        if violates {
            return Reversibility::NotReversibleWitness(z);
        }
    }
    Reversibility::UnknownWithinHorizon
}
