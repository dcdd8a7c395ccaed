//! Proof-theoretic cellular automata: lattices whose cell states are
//! logical formulas (or reaction mixtures) and whose local transition
//! function is an inference rule.
//!
//! The crate is organized around four subsystems plus scenario plumbing:
//!
//! * [`logic`] — the formula and sequent languages: parsing, canonical
//!   printing, equality modes, substitution.
//! * [`engine`] — the generic automaton core: geometry, synchronous
//!   evolution, scripted cells, trace classification.
//! * [`rules`] — the logical transition rules (modus ponens, the
//!   five-rule Hilbert-style system, the 14-rule sequent calculus, and
//!   the inductive predicate rules with their driven cyclic scenario).
//! * [`bz`] — the Belousov-Zhabotinsky reaction automaton: species,
//!   oplus-clusters, mixtures, the seven reaction rules and the
//!   metaoperations that combine them.
//! * [`scenario`] — scenario files, built-in scenarios, run reports,
//!   snapshot formats and golden comparison.

pub mod bz;
pub mod engine;
pub mod logic;
pub mod rules;
pub mod scenario;

pub use engine::{Configuration, Neighborhood, Point, Region};
pub use logic::{EqualityMode, Formula, Sequent};
