//! Generic cellular-automaton core: lattice geometry, synchronous
//! evolution under a pluggable transition rule, scripted cells, and
//! derivation-trace analysis.
//!
//! The engine is generic over the cell-state type `S`; the alphabets
//! (formulas, sequents, reaction mixtures) live in their own modules and
//! plug in through [`TransitionRule`].

mod analysis;
mod config;
mod evolve;
mod geometry;

pub use analysis::{
    classify_trace, detect_global_cycle, is_reversible, trace_of, CycleInfo, Reversibility, Trace,
    TraceClass,
};
pub use config::{
    neighbor_snapshot, Configuration, Delta, EngineError, RuleTrace, Schedule, ScriptedCells,
    TimePattern, TransitionRule,
};
pub use evolve::{evolve, step, step_traced, Evolution, StepFires};
pub use geometry::{moore, von_neumann, GeometryError, Neighborhood, Point, Region};
