//! Asynchronous dynamics of Boolean networks and fixing words.
//!
//! A network `f: {0,1}^n -> {0,1}^n` acts on states through its letters: the
//! letter `i` replaces component `i` of a state by `f_i` of that state, and
//! letters outside `1..=n` do nothing. A word *fixes* `f` when it sends every
//! state to a fixed point. This crate provides:
//!
//! * [`network`]: states, words, networks and their structural predicates;
//! * [`words`]: subword tests, universal and path-universal words;
//! * [`graphs`]: digraphs on `[n]`, strong components, circumference and
//!   exact `l`-feedback sets;
//! * [`synth`]: constructive fixing words for several network families;
//! * [`oracle`]: exhaustive ground truth for small `n`.

pub mod error;
pub mod graphs;
pub mod network;
pub mod oracle;
pub mod synth;
pub mod words;

pub use error::{Error, Result};
pub use graphs::Digraph;
pub use network::{AsyncGraph, BooleanNetwork, Configuration, State, StateSet, Word};
