// exhaustive table scans read clearest with explicit indices
#![allow(clippy::needless_range_loop)]

//! Syntactic algebras of regular languages, computed uniformly over five
//! commutative varieties: sets, pointed sets, involution algebras,
//! join-semilattices with zero, and vector spaces over a prime field.
//!
//! The library builds finite automata whose state spaces are algebras of the
//! chosen variety, minimizes them, and extracts their syntactic monoid (resp.
//! monoid with zero, involution monoid, idempotent semiring, associative
//! algebra) by three mutually cross-checking routes:
//!
//! * the transition monoid of the minimal automaton ([`syntactic`]),
//! * the syntactic congruence, probed by an independent context oracle
//!   ([`syntactic::SyntacticOracle`]),
//! * for classical languages, the dual construction through the boolean
//!   algebra generated by the derivatives of the reversed language
//!   ([`duality`]).
//!
//! The [`check`] module runs randomized sweeps that exercise the agreement of
//! the three routes; with the default `parallel` feature the sweeps fan out
//! over a rayon pool, otherwise they run sequentially.

pub mod automaton;
pub mod check;
pub mod duality;
pub mod error;
pub mod free;
pub mod guard;
pub mod json;
pub mod minimize;
pub mod par;
pub mod regex;
pub mod syntactic;
pub mod variety;

pub use automaton::DAutomaton;
pub use error::{Error, Violation};
pub use free::{Alphabet, FreeElement};
pub use variety::{FiniteDObject, Partition, VarietySpec, VarietyTag};
