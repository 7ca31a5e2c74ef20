//! Error and violation types shared across the crate.

use thiserror::Error;

/// A broken law of the ambient variety, reported as data rather than as an
/// error: validators return every violation they find.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short name of the violated law, e.g. `"involution not self-inverse"`.
    pub law: String,
    /// The witnessing elements / operation, rendered for humans.
    pub witness: String,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation { law: law.into(), witness: witness.into() }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {}", self.law, self.witness)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("variety mismatch: expected {expected}, got {got}")]
    VarietyMismatch { expected: String, got: String },

    #[error("unknown letter {0:?}")]
    UnknownLetter(char),

    #[error("unknown element id {id} (carrier size {size})")]
    UnknownElement { id: usize, size: usize },

    #[error("carrier size {requested} exceeds size guard {limit}")]
    SizeGuard { requested: usize, limit: usize },

    #[error("partition is not a congruence: {op} differs on blocks (witness {witness})")]
    NotACongruence { op: String, witness: String },

    #[error("map is not a homomorphism: {0}")]
    NotAMorphism(String),

    #[error("invalid automaton: {}", render_violations(.0))]
    InvalidAutomaton(Vec<Violation>),

    #[error("invalid object: {}", render_violations(.0))]
    InvalidObject(Vec<Violation>),

    #[error("no unique successor atom for ({atom}, {letter}): generator set was not derivative-closed")]
    NonFunctionalTransition { atom: String, letter: char },

    #[error("regex parse error at byte {pos}: {message}")]
    RegexParse { pos: usize, message: String },

    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn render_violations(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// Process exit code for the CLI: 2 validation, 3 size guard, 4 usage.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeGuard { .. } => 3,
            Error::Config(_) => 4,
            _ => 2,
        }
    }
}
